//! Crate-wide error type.

use std::path::PathBuf;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building a model, solving it, or
/// moving data in and out of files.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Geometry failed validation (non-positive length, odd roller count, ...).
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    /// Contact stiffness failed validation (non-positive constant).
    #[error("invalid stiffness: {0}")]
    InvalidStiffness(String),

    /// Load case failed validation.
    #[error("invalid load case: {0}")]
    InvalidLoadCase(String),

    /// Invalid argument to an analysis operation.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The sector iteration exhausted its budget without meeting the
    /// residual tolerance, even after the grid fallback.
    #[error("sector equilibrium did not converge after {iterations} iterations \
             (scaled residual {residual:.3e})")]
    NonConvergence { iterations: usize, residual: f64 },

    /// A converged root carries a contact interference below the clamping
    /// band; the caller should treat the sector as disengaged.
    #[error("negative contact interference {value:.3e} mm in {contact}")]
    NegativeInterference { contact: &'static str, value: f64 },

    /// The roller-wire interference left the range where the rigid-arm
    /// kinematics are meaningful.
    #[error("roller-wire interference {delta3:.4} mm exceeds the validity bound {bound:.4} mm")]
    OutsideValidity { delta3: f64, bound: f64 },

    /// A sector solve failed inside a whole-bearing operation.
    #[error("sector {index}: {source}")]
    Sector {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    /// A sweep step failed.
    #[error("sweep step {step}: {source}")]
    SweepStep {
        step: usize,
        #[source]
        source: Box<Error>,
    },

    /// A calibration record is inconsistent (e.g. derived roller-wire
    /// interference is not positive).
    #[error("non-physical calibration record: {0}")]
    NonPhysical(String),

    /// Too few usable records or table rows.
    #[error("insufficient data: {0}")]
    InsufficientData(String),

    /// All abscissae vanish; a slope through the origin is undefined.
    #[error("degenerate data: {0}")]
    DegenerateData(String),

    /// The capacity search hit the model validity bound before reaching the
    /// requested normal-force limit.
    #[error("load limit not reached: {0}")]
    NotReached(String),

    /// A configuration file could not be read or did not make sense.
    #[error("config {}: {message}", path.display())]
    Config { path: PathBuf, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Wraps an error with the index of the sector it occurred in.
    pub(crate) fn in_sector(self, index: usize) -> Error {
        Error::Sector {
            index,
            source: Box::new(self),
        }
    }

    /// Wraps an error with the index of the sweep step it occurred in.
    pub(crate) fn in_sweep_step(self, step: usize) -> Error {
        Error::SweepStep {
            step,
            source: Box::new(self),
        }
    }
}
