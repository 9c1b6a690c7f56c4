//! Quasi-static contact model and stiffness analysis for crossed-roller
//! wire race bearings.
//!
//! A wire race bearing runs its rollers on four spring-tempered wires seated
//! in the light-alloy rings. Under load each wire tilts on its seat, so the
//! load path ring -> wire -> roller behaves like three contact springs in
//! series with a geometric degree of freedom (the loaded contact angle).
//! This crate models one roller-wire sector with that four-unknown
//! equilibrium, distributes ring displacements over the full roller set and
//! sums the sector reactions into bearing-level forces, moments and
//! stiffnesses.
//!
//! Units are millimetres, newtons, N·mm and radians throughout the library;
//! the CLI accepts and prints degrees at the surface.
//!
//! Start with the runnable examples, each a small self-contained study:
//!
//! ```text
//! cargo run --release -p wirerace --example single_sector
//! cargo run --release -p wirerace --example axial_stiffness
//! cargo run --release -p wirerace --example radial_stiffness
//! cargo run --release -p wirerace --example moment_stiffness
//! cargo run --release -p wirerace --example load_distribution
//! cargo run --release -p wirerace --example calibrate_from_csv
//! cargo run --release -p wirerace --example capacity_search
//! ```
//!
//! The same capabilities are scriptable through the thin `wirerace` binary
//! (`calibrate`, `solve`, `sweep` subcommands).

pub mod analysis;
pub mod assembly;
pub mod calibration;
pub mod config;
pub mod error;
pub mod model;
pub mod presets;
pub mod regression;
pub mod sector;

pub use error::{Error, Result};
pub use model::{
    BearingGeometry, ContactStiffness, GlobalReactions, LoadCase, RollerType, SectorKinematics,
    SectorSolution,
};
pub use sector::{friction_sign, recover_contact, solve_sector};
