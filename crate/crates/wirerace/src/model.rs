//! Core data model: bearing geometry, contact stiffness constants, load
//! cases, and the per-sector records the solvers produce.
//!
//! Conventions used throughout the crate:
//!
//! * lengths in mm, forces in N, moments in N·mm, angles in radians;
//! * the bearing axis is y; a roller at ring angle θ sits at
//!   (R·cos θ, 0, R·sin θ) with R = pitch_diameter / 2;
//! * positive axial displacement compresses the type-A roller set;
//! * sector 0 is type A at θ = 0 and types alternate around the ring.

use crate::error::{Error, Result};

/// Wraps an angle into [0, 2π).
pub(crate) fn wrap_angle(a: f64) -> f64 {
    let two_pi = std::f64::consts::TAU;
    let mut r = a % two_pi;
    if r < 0.0 {
        r += two_pi;
    }
    r
}

/// Macro-geometry of a crossed-roller wire race bearing.
///
/// All lengths in mm, `initial_contact_angle` in radians. `roller_diameter`
/// and `race_radius` describe the cross-section for reporting purposes; the
/// equilibrium equations operate on `contact_diameter`, `wire_diameter`,
/// `pitch_diameter` and the contact angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BearingGeometry {
    /// Roller diameter D_w.
    pub roller_diameter: f64,
    /// Pitch diameter D_pw of the roller set.
    pub pitch_diameter: f64,
    /// Distance D_cw across a roller between its two wire contact points.
    pub contact_diameter: f64,
    /// Race groove radius R_c of the wire cross-section.
    pub race_radius: f64,
    /// Wire cross-section diameter λ.
    pub wire_diameter: f64,
    /// Unloaded contact angle α0, radians, in (0, π/2).
    pub initial_contact_angle: f64,
    /// Number of rollers N; even, alternating orientation.
    pub roller_count: usize,
    /// Coulomb friction coefficient μ of the wire-ring contacts, in [0, 1).
    pub friction_coefficient: f64,
}

impl BearingGeometry {
    /// Checks the physical and model constraints.
    pub fn validate(&self) -> Result<()> {
        let positive: [(&str, f64); 5] = [
            ("roller_diameter", self.roller_diameter),
            ("pitch_diameter", self.pitch_diameter),
            ("contact_diameter", self.contact_diameter),
            ("race_radius", self.race_radius),
            ("wire_diameter", self.wire_diameter),
        ];
        for (name, v) in positive {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::InvalidGeometry(format!("{name} must be positive, got {v}")));
            }
        }
        if !(self.initial_contact_angle > 0.0
            && self.initial_contact_angle < std::f64::consts::FRAC_PI_2)
        {
            return Err(Error::InvalidGeometry(format!(
                "initial_contact_angle must lie in (0, pi/2) rad, got {}",
                self.initial_contact_angle
            )));
        }
        if self.roller_count < 2 || self.roller_count % 2 != 0 {
            return Err(Error::InvalidGeometry(format!(
                "roller_count must be even and at least 2, got {}",
                self.roller_count
            )));
        }
        if !(self.friction_coefficient >= 0.0 && self.friction_coefficient < 1.0) {
            return Err(Error::InvalidGeometry(format!(
                "friction_coefficient must lie in [0, 1), got {}",
                self.friction_coefficient
            )));
        }
        if self.contact_diameter >= self.pitch_diameter {
            return Err(Error::InvalidGeometry(
                "contact_diameter must be smaller than pitch_diameter".into(),
            ));
        }
        if self.wire_diameter >= self.contact_diameter {
            return Err(Error::InvalidGeometry(
                "wire_diameter must be smaller than contact_diameter".into(),
            ));
        }
        Ok(())
    }

    /// Upper bound on the roller-wire interference Δ3 for which the
    /// rigid-arm kinematics remain meaningful (a quarter of the contact
    /// diameter).
    pub fn validity_bound(&self) -> f64 {
        self.contact_diameter / 4.0
    }
}

/// Linearized contact stiffness constants, N/mm.
///
/// `k1` and `k2` govern the wire-ring contacts loaded by the axial and
/// radial interferences respectively; `k3` governs the roller-wire contact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContactStiffness {
    pub k1: f64,
    pub k2: f64,
    pub k3: f64,
}

impl ContactStiffness {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("k1", self.k1), ("k2", self.k2), ("k3", self.k3)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::InvalidStiffness(format!(
                    "{name} must be positive, got {v}"
                )));
            }
        }
        Ok(())
    }
}

/// Relative ring displacement imposed on the bearing.
///
/// `axial` is signed (positive compresses the type-A rollers), `radial` is a
/// magnitude acting toward ring angle `theta_r`, and `tilt` is a signed
/// rotation about the in-plane axis pointing toward `theta_m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LoadCase {
    /// Axial displacement Δ_A, mm, signed.
    pub axial: f64,
    /// Radial displacement magnitude Δ_R, mm, non-negative.
    pub radial: f64,
    /// Direction of the radial displacement, radians in [0, 2π).
    pub theta_r: f64,
    /// Tilt rotation φ_M, radians, signed.
    pub tilt: f64,
    /// Direction of the tilt axis, radians in [0, 2π).
    pub theta_m: f64,
}

impl LoadCase {
    /// Builds a validated load case; angles are wrapped into [0, 2π).
    pub fn new(axial: f64, radial: f64, theta_r: f64, tilt: f64, theta_m: f64) -> Result<Self> {
        let case = LoadCase {
            axial,
            radial,
            theta_r: wrap_angle(theta_r),
            tilt,
            theta_m: wrap_angle(theta_m),
        };
        case.validate()?;
        Ok(case)
    }

    /// Checks the constraints `new` enforces; useful for cases built by hand.
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("axial", self.axial),
            ("radial", self.radial),
            ("theta_r", self.theta_r),
            ("tilt", self.tilt),
            ("theta_m", self.theta_m),
        ] {
            if !v.is_finite() {
                return Err(Error::InvalidLoadCase(format!("{name} must be finite")));
            }
        }
        if self.radial < 0.0 {
            return Err(Error::InvalidLoadCase(format!(
                "radial magnitude must be non-negative (direction is carried by theta_r), got {}",
                self.radial
            )));
        }
        Ok(())
    }

    /// Pure axial displacement.
    pub fn pure_axial(axial: f64) -> Self {
        LoadCase::new(axial, 0.0, 0.0, 0.0, 0.0).expect("finite axial displacement")
    }

    /// Pure radial displacement toward `theta_r`.
    pub fn pure_radial(radial: f64, theta_r: f64) -> Result<Self> {
        LoadCase::new(0.0, radial, theta_r, 0.0, 0.0)
    }

    /// Pure tilt about the axis pointing toward `theta_m`.
    pub fn pure_moment(tilt: f64, theta_m: f64) -> Self {
        LoadCase::new(0.0, 0.0, 0.0, tilt, theta_m).expect("finite tilt")
    }

    pub fn is_zero(&self) -> bool {
        self.axial == 0.0 && self.radial == 0.0 && self.tilt == 0.0
    }
}

impl Default for LoadCase {
    fn default() -> Self {
        LoadCase::pure_axial(0.0)
    }
}

/// Orientation of a roller within the alternating crossed arrangement.
///
/// A type-A roller transmits positive axial displacement through its
/// moving-ring wire; a type-B roller is the axial mirror image.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RollerType {
    A,
    B,
}

impl std::fmt::Display for RollerType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RollerType::A => write!(f, "A"),
            RollerType::B => write!(f, "B"),
        }
    }
}

/// Per-sector kinematic state: position, orientation, and the displacements
/// the distribution step assigned to it.
///
/// `axial` and `radial` are the distributed sector displacements (the raw,
/// un-mirrored values; the solver mirrors the axial one for type B).
/// `friction_sign` is the sign used in the solve (0 until solved or when the
/// friction terms vanish).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectorKinematics {
    pub index: usize,
    /// Ring angle θ of the sector, radians in [0, 2π).
    pub theta: f64,
    pub roller_type: RollerType,
    /// Distributed sector axial displacement Δ_A^i, mm, signed.
    pub axial: f64,
    /// Distributed sector radial displacement Δ_R^i, mm, signed.
    pub radial: f64,
    /// Friction sign s ∈ {-1, 0, +1} frozen for the solve.
    pub friction_sign: i8,
    pub engaged: bool,
}

/// Converged equilibrium state of one engaged sector.
///
/// Interferences in mm, forces in N, angles in radians. For a disengaged
/// sector all forces and interferences are zero and both angles equal the
/// unloaded contact angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectorSolution {
    /// Wire-ring interference Δ1 at the axial-normal contact.
    pub delta1: f64,
    /// Wire-ring interference Δ2 at the radial-normal contact.
    pub delta2: f64,
    /// Roller-wire interference Δ3.
    pub delta3: f64,
    /// Loaded contact angle α.
    pub alpha: f64,
    /// Contact normal force N1 = k1·Δ1.
    pub n1: f64,
    /// Contact normal force N2 = k2·Δ2.
    pub n2: f64,
    /// Resultant of the wire-ring contact and friction forces.
    pub f_t: f64,
    /// Direction α_T of that resultant.
    pub alpha_t: f64,
    /// Component of the resultant along the roller-wire contact normal.
    pub f_n: f64,
}

impl SectorSolution {
    /// The all-zero state of an unloaded or disengaged sector.
    pub fn disengaged(alpha0: f64) -> Self {
        SectorSolution {
            delta1: 0.0,
            delta2: 0.0,
            delta3: 0.0,
            alpha: alpha0,
            n1: 0.0,
            n2: 0.0,
            f_t: 0.0,
            alpha_t: alpha0,
            f_n: 0.0,
        }
    }
}

/// Reactions transmitted through the bearing, expressed as the loads applied
/// to the displaced ring. Forces in N, moments in N·mm; y is the bearing
/// axis.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct GlobalReactions {
    pub fx: f64,
    /// Axial reaction.
    pub fy: f64,
    pub fz: f64,
    /// Tilting moment about the x axis.
    pub mx: f64,
    /// Tilting moment about the z axis.
    pub mz: f64,
}

impl GlobalReactions {
    /// Magnitude of the resultant tilting moment, N·mm.
    pub fn tilt_moment(&self) -> f64 {
        self.mx.hypot(self.mz)
    }

    /// Ring angle of the resultant tilting moment axis, radians in [0, 2π);
    /// zero when there is no tilting moment.
    pub fn tilt_axis(&self) -> f64 {
        if self.mx == 0.0 && self.mz == 0.0 {
            0.0
        } else {
            wrap_angle(self.mz.atan2(self.mx))
        }
    }

    /// Moment about the in-plane axis pointing toward `theta`, N·mm.
    pub fn moment_about(&self, theta: f64) -> f64 {
        self.mx * theta.cos() + self.mz * theta.sin()
    }

    /// In-plane force component toward `theta`, N.
    pub fn radial_toward(&self, theta: f64) -> f64 {
        self.fx * theta.cos() + self.fz * theta.sin()
    }
}

/// Lays out the roller set: evenly spaced sectors starting at θ = 0 with
/// alternating orientation (even indices type A).
///
/// Displacements are zeroed; the distribution and solve steps fill them in.
pub fn build_sectors(geometry: &BearingGeometry) -> Result<Vec<SectorKinematics>> {
    geometry.validate()?;
    let n = geometry.roller_count;
    let mut sectors = Vec::with_capacity(n);
    for i in 0..n {
        sectors.push(SectorKinematics {
            index: i,
            theta: std::f64::consts::TAU * i as f64 / n as f64,
            roller_type: if i % 2 == 0 { RollerType::A } else { RollerType::B },
            axial: 0.0,
            radial: 0.0,
            friction_sign: 0,
            engaged: false,
        });
    }
    Ok(sectors)
}
