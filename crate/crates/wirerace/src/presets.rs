//! Reference data for a commercial 420 mm pitch crossed-roller wire race
//! bearing, used by the examples, the sample data files, and the test
//! suites.
//!
//! The stiffness constants correspond to single-contact finite-element
//! compression studies of this cross-section; they close the model for
//! analysis without re-running a calibration.

use crate::model::{BearingGeometry, ContactStiffness};

/// Geometry of the 420 mm pitch catalog bearing (μ = 0.1 wire-ring friction).
pub fn catalog_geometry() -> BearingGeometry {
    BearingGeometry {
        roller_diameter: 14.0,
        pitch_diameter: 420.0,
        contact_diameter: 18.0,
        race_radius: 3.9,
        wire_diameter: 8.0,
        initial_contact_angle: std::f64::consts::FRAC_PI_4,
        roller_count: 94,
        friction_coefficient: 0.1,
    }
}

/// Calibrated contact stiffness constants for [`catalog_geometry`], N/mm.
pub fn catalog_stiffness() -> ContactStiffness {
    ContactStiffness {
        k1: 372_509.0,
        k2: 368_393.0,
        k3: 447_544.0,
    }
}
