//! Fits the three contact stiffness constants from externally measured
//! force-deformation probe records.
//!
//! Each record comes from one probe of a single sector stack: a total
//! displacement `delta` imposed along the contact normal, the three contact
//! forces `f1`, `f2`, `f3`, and the two measured wire-centre displacements
//! `d1`, `d2`. The roller-wire deformation is the remainder along the
//! probe direction, `Δ3 = delta − sqrt(d1² + d2²)`.
//!
//! The contact laws are homogeneous (zero load means zero force), so each
//! constant is a least-squares line through the origin: k1 on (d1, f1),
//! k2 on (d2, f2), k3 on (Δ3, f3). The fit reports the largest relative
//! deviation per constant; the model downstream assumes constant stiffness,
//! so deviations above [`LINEARITY_WARNING_THRESHOLD`] deserve a warning.

use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::ContactStiffness;
use crate::regression::{max_relative_deviation, slope_through_origin};

/// Max relative deviation above which the linear-contact assumption is
/// considered shaky.
pub const LINEARITY_WARNING_THRESHOLD: f64 = 0.05;

/// One force-deformation probe record. Lengths in mm, forces in N.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CalibrationRecord {
    /// Total displacement imposed along the contact normal.
    pub delta: f64,
    /// Force at the wire-ring contact loaded by d1.
    pub f1: f64,
    /// Force at the wire-ring contact loaded by d2.
    pub f2: f64,
    /// Force at the roller-wire contact.
    pub f3: f64,
    /// Measured wire-centre displacement at the first contact.
    pub d1: f64,
    /// Measured wire-centre displacement at the second contact.
    pub d2: f64,
}

impl CalibrationRecord {
    /// Checks signs and finiteness; the displacement split is checked by
    /// [`derive_delta3`].
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("delta", self.delta),
            ("f1", self.f1),
            ("f2", self.f2),
            ("f3", self.f3),
            ("d1", self.d1),
            ("d2", self.d2),
        ] {
            if !v.is_finite() {
                return Err(Error::InvalidInput(format!(
                    "calibration record field {name} must be finite"
                )));
            }
        }
        if self.delta <= 0.0 {
            return Err(Error::NonPhysical(format!(
                "applied displacement must be positive, got {}",
                self.delta
            )));
        }
        for (name, v) in [("f1", self.f1), ("f2", self.f2), ("f3", self.f3)] {
            if v < 0.0 {
                return Err(Error::NonPhysical(format!(
                    "probe force {name} must be non-negative, got {v}"
                )));
            }
        }
        for (name, v) in [("d1", self.d1), ("d2", self.d2)] {
            if v < 0.0 {
                return Err(Error::NonPhysical(format!(
                    "wire-centre displacement {name} must be non-negative, got {v}"
                )));
            }
        }
        Ok(())
    }
}

/// Roller-wire deformation left over after removing the wire-centre motion:
/// `Δ3 = delta − sqrt(d1² + d2²)`.
///
/// Errors with `NonPhysical` when the wire-centre motion consumes the whole
/// imposed displacement (nothing would be left to deform the roller
/// contact).
pub fn derive_delta3(record: &CalibrationRecord) -> Result<f64> {
    record.validate()?;
    let delta3 = record.delta - record.d1.hypot(record.d2);
    if delta3 <= 0.0 {
        return Err(Error::NonPhysical(format!(
            "wire-centre displacement sqrt(d1^2 + d2^2) = {} must stay below the applied \
             displacement {}",
            record.d1.hypot(record.d2),
            record.delta
        )));
    }
    Ok(delta3)
}

/// Largest relative deviation of the records from each fitted line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitDeviations {
    pub k1: f64,
    pub k2: f64,
    pub k3: f64,
}

impl FitDeviations {
    pub fn max(&self) -> f64 {
        self.k1.max(self.k2).max(self.k3)
    }
}

/// Fitted stiffness constants plus the per-constant fit quality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StiffnessFit {
    pub stiffness: ContactStiffness,
    pub deviations: FitDeviations,
}

impl StiffnessFit {
    /// True when any contact strays far enough from its fitted line that
    /// the constant-stiffness assumption looks doubtful.
    pub fn linearity_warning(&self) -> bool {
        self.deviations.max() > LINEARITY_WARNING_THRESHOLD
    }
}

fn fit_one(points: &[(f64, f64)], name: &str) -> Result<(f64, f64)> {
    let Some(slope) = slope_through_origin(points) else {
        return Err(Error::DegenerateData(format!(
            "all {name} deformations are zero; the constant cannot be identified"
        )));
    };
    if !(slope > 0.0) || !slope.is_finite() {
        return Err(Error::DegenerateData(format!(
            "fitted {name} is not positive (got {slope}); probe forces do not load this contact"
        )));
    }
    Ok((slope, max_relative_deviation(points, slope)))
}

/// Fits k1, k2, k3 from a set of probe records.
///
/// Needs at least two records spanning two distinct displacement levels.
/// Every record is validated; a record whose displacement split is
/// impossible aborts the fit with `NonPhysical`.
pub fn fit_stiffness(records: &[CalibrationRecord]) -> Result<StiffnessFit> {
    if records.len() < 2 {
        return Err(Error::InsufficientData(format!(
            "need at least 2 calibration records, got {}",
            records.len()
        )));
    }
    let mut pts1 = Vec::with_capacity(records.len());
    let mut pts2 = Vec::with_capacity(records.len());
    let mut pts3 = Vec::with_capacity(records.len());
    for r in records {
        let delta3 = derive_delta3(r)?;
        pts1.push((r.d1, r.f1));
        pts2.push((r.d2, r.f2));
        pts3.push((delta3, r.f3));
    }
    let first = records[0].delta;
    if records.iter().all(|r| r.delta == first) {
        return Err(Error::InsufficientData(
            "records must span at least two distinct displacement levels".into(),
        ));
    }

    let (k1, dev1) = fit_one(&pts1, "k1")?;
    let (k2, dev2) = fit_one(&pts2, "k2")?;
    let (k3, dev3) = fit_one(&pts3, "k3")?;
    let stiffness = ContactStiffness { k1, k2, k3 };
    stiffness.validate()?;
    Ok(StiffnessFit {
        stiffness,
        deviations: FitDeviations {
            k1: dev1,
            k2: dev2,
            k3: dev3,
        },
    })
}

/// Reads probe records from CSV with the header
/// `delta,f1,f2,f3,d1,d2` (mm and N, decimal point, comma separator).
///
/// This is a syntactic read; physical validation happens in
/// [`fit_stiffness`].
pub fn read_records<R: Read>(reader: R) -> Result<Vec<CalibrationRecord>> {
    let mut csv_reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(reader);
    let mut records = Vec::new();
    for row in csv_reader.deserialize() {
        records.push(row?);
    }
    Ok(records)
}

/// Reads probe records from a CSV file.
pub fn read_records_from_path(path: &Path) -> Result<Vec<CalibrationRecord>> {
    let file = std::fs::File::open(path).map_err(|e| Error::Config {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    read_records(file)
}

/// Writes probe records as CSV with the standard header.
pub fn write_records<W: Write>(writer: W, records: &[CalibrationRecord]) -> Result<()> {
    let mut csv_writer = csv::Writer::from_writer(writer);
    for r in records {
        csv_writer.serialize(r)?;
    }
    csv_writer.flush()?;
    Ok(())
}
