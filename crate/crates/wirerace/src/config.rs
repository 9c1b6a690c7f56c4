//! JSON configuration files for geometry and stiffness constants.
//!
//! Field names match the model structs one for one. Lengths are mm and the
//! contact angle is stored in degrees in the file (drawings and data sheets
//! quote degrees); the conversion to the radians used internally happens
//! here and nowhere else. Unknown fields are rejected so a typo cannot
//! silently fall back to a default.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{BearingGeometry, ContactStiffness};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GeometryFile {
    roller_diameter: f64,
    pitch_diameter: f64,
    contact_diameter: f64,
    race_radius: f64,
    wire_diameter: f64,
    /// Degrees in the file.
    initial_contact_angle: f64,
    roller_count: usize,
    friction_coefficient: f64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StiffnessFile {
    k1: f64,
    k2: f64,
    k3: f64,
}

/// Parses and validates a geometry from JSON text.
pub fn geometry_from_json(text: &str) -> Result<BearingGeometry> {
    let file: GeometryFile = serde_json::from_str(text)?;
    let geometry = BearingGeometry {
        roller_diameter: file.roller_diameter,
        pitch_diameter: file.pitch_diameter,
        contact_diameter: file.contact_diameter,
        race_radius: file.race_radius,
        wire_diameter: file.wire_diameter,
        initial_contact_angle: file.initial_contact_angle.to_radians(),
        roller_count: file.roller_count,
        friction_coefficient: file.friction_coefficient,
    };
    geometry.validate()?;
    Ok(geometry)
}

/// Renders a geometry as JSON text (angle back in degrees).
pub fn geometry_to_json(geometry: &BearingGeometry) -> Result<String> {
    let file = GeometryFile {
        roller_diameter: geometry.roller_diameter,
        pitch_diameter: geometry.pitch_diameter,
        contact_diameter: geometry.contact_diameter,
        race_radius: geometry.race_radius,
        wire_diameter: geometry.wire_diameter,
        initial_contact_angle: geometry.initial_contact_angle.to_degrees(),
        roller_count: geometry.roller_count,
        friction_coefficient: geometry.friction_coefficient,
    };
    Ok(serde_json::to_string_pretty(&file)? + "\n")
}

/// Parses and validates stiffness constants from JSON text.
pub fn stiffness_from_json(text: &str) -> Result<ContactStiffness> {
    let file: StiffnessFile = serde_json::from_str(text)?;
    let stiffness = ContactStiffness {
        k1: file.k1,
        k2: file.k2,
        k3: file.k3,
    };
    stiffness.validate()?;
    Ok(stiffness)
}

/// Renders stiffness constants as JSON text.
pub fn stiffness_to_json(stiffness: &ContactStiffness) -> Result<String> {
    let file = StiffnessFile {
        k1: stiffness.k1,
        k2: stiffness.k2,
        k3: stiffness.k3,
    };
    Ok(serde_json::to_string_pretty(&file)? + "\n")
}

fn read_with_context(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Config {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

fn tag_parse_error(err: Error, path: &Path) -> Error {
    match err {
        Error::Json(e) => Error::Config {
            path: path.to_path_buf(),
            message: e.to_string(),
        },
        other => other,
    }
}

/// Reads a geometry file, tagging I/O and syntax problems with the path.
pub fn read_geometry(path: &Path) -> Result<BearingGeometry> {
    geometry_from_json(&read_with_context(path)?).map_err(|e| tag_parse_error(e, path))
}

pub fn write_geometry(path: &Path, geometry: &BearingGeometry) -> Result<()> {
    Ok(std::fs::write(path, geometry_to_json(geometry)?)?)
}

/// Reads a stiffness file, tagging I/O and syntax problems with the path.
pub fn read_stiffness(path: &Path) -> Result<ContactStiffness> {
    stiffness_from_json(&read_with_context(path)?).map_err(|e| tag_parse_error(e, path))
}

pub fn write_stiffness(path: &Path, stiffness: &ContactStiffness) -> Result<()> {
    Ok(std::fs::write(path, stiffness_to_json(stiffness)?)?)
}
