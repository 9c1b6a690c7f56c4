//! Thin command-line front end over the library: `calibrate`, `solve` and
//! `sweep`. Lengths in mm, forces in N, angles in degrees on this surface;
//! moments are printed in both N·mm and N·m. Identical invocations produce
//! byte-identical outputs.
//!
//! Exit codes: 0 ok, 2 input or configuration error, 3 calibration error,
//! 4 solver error.

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;

use wirerace::analysis::{
    moment_slope_nm_per_deg, secant_stiffness, sweep, write_distribution_csv, write_sweep_csv,
    SweepAxis,
};
use wirerace::assembly::solve_bearing;
use wirerace::calibration::{fit_stiffness, read_records_from_path};
use wirerace::config::{read_geometry, read_stiffness, write_stiffness};
use wirerace::analysis::distribution_rows;
use wirerace::model::LoadCase;
use wirerace::Error;

#[derive(Parser)]
#[command(
    name = "wirerace",
    version,
    about = "Quasi-static solver for crossed-roller wire race bearings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fit the three contact stiffness constants from probe CSV records
    Calibrate {
        /// Probe records, CSV with header delta,f1,f2,f3,d1,d2 (mm, N)
        #[arg(long)]
        input: PathBuf,
        /// Output stiffness JSON file
        #[arg(long)]
        out: PathBuf,
    },
    /// Solve one displacement case and write the per-sector table
    Solve {
        /// Geometry JSON file
        #[arg(long)]
        geometry: PathBuf,
        /// Stiffness JSON file
        #[arg(long)]
        stiffness: PathBuf,
        /// Axial displacement, mm (signed)
        #[arg(long, default_value_t = 0.0)]
        axial: f64,
        /// Radial displacement magnitude, mm
        #[arg(long, default_value_t = 0.0)]
        radial: f64,
        /// Direction of the radial displacement, degrees
        #[arg(long = "theta-r", default_value_t = 0.0)]
        theta_r: f64,
        /// Tilt rotation, degrees (signed)
        #[arg(long, default_value_t = 0.0)]
        moment: f64,
        /// Direction of the tilt axis, degrees
        #[arg(long = "theta-m", default_value_t = 0.0)]
        theta_m: f64,
        /// Output per-sector CSV file
        #[arg(long)]
        out: PathBuf,
    },
    /// Sweep one displacement axis and report the secant stiffness
    Sweep {
        /// Geometry JSON file
        #[arg(long)]
        geometry: PathBuf,
        /// Stiffness JSON file
        #[arg(long)]
        stiffness: PathBuf,
        /// Swept axis: axial, radial or moment
        #[arg(long)]
        axis: String,
        /// Largest displacement: mm for axial/radial, degrees for moment
        #[arg(long)]
        max: f64,
        /// Number of sweep points including the origin (>= 2)
        #[arg(long)]
        steps: usize,
        /// Direction of the radial displacement, degrees
        #[arg(long = "theta-r", default_value_t = 0.0)]
        theta_r: f64,
        /// Direction of the tilt axis, degrees
        #[arg(long = "theta-m", default_value_t = 0.0)]
        theta_m: f64,
        /// Output sweep CSV file
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Serialize)]
struct CalibrationReport {
    k1_n_per_mm: f64,
    k2_n_per_mm: f64,
    k3_n_per_mm: f64,
    max_relative_deviation: f64,
    linearity_warning: bool,
}

#[derive(Serialize)]
struct SolveReport {
    engaged: usize,
    fx_n: f64,
    fy_n: f64,
    fz_n: f64,
    mx_n_mm: f64,
    mx_n_m: f64,
    mz_n_mm: f64,
    mz_n_m: f64,
    tilt_moment_n_mm: f64,
    tilt_moment_n_m: f64,
    tilt_axis_deg: f64,
}

#[derive(Serialize)]
struct SweepReport {
    axis: String,
    secant_stiffness: f64,
    units: &'static str,
    max_relative_deviation: f64,
    steps: usize,
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvalidGeometry(_)
        | Error::InvalidStiffness(_)
        | Error::InvalidLoadCase(_)
        | Error::InvalidInput(_)
        | Error::Config { .. }
        | Error::Io(_)
        | Error::Csv(_)
        | Error::Json(_) => 2,
        Error::NonPhysical(_) | Error::InsufficientData(_) | Error::DegenerateData(_) => 3,
        Error::NonConvergence { .. }
        | Error::NegativeInterference { .. }
        | Error::OutsideValidity { .. }
        | Error::Sector { .. }
        | Error::SweepStep { .. }
        | Error::NotReached(_) => 4,
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Calibrate { input, out } => {
            let records = read_records_from_path(&input)?;
            let fit = fit_stiffness(&records)?;
            write_stiffness(&out, &fit.stiffness)?;
            if fit.linearity_warning() {
                eprintln!(
                    "warning: max relative deviation {:.3e} exceeds the linearity threshold; \
                     the constant-stiffness assumption may not hold for this data",
                    fit.deviations.max()
                );
            }
            let report = CalibrationReport {
                k1_n_per_mm: fit.stiffness.k1,
                k2_n_per_mm: fit.stiffness.k2,
                k3_n_per_mm: fit.stiffness.k3,
                max_relative_deviation: fit.deviations.max(),
                linearity_warning: fit.linearity_warning(),
            };
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
        Command::Solve {
            geometry,
            stiffness,
            axial,
            radial,
            theta_r,
            moment,
            theta_m,
            out,
        } => {
            let geometry = read_geometry(&geometry)?;
            let stiffness = read_stiffness(&stiffness)?;
            let case = LoadCase::new(
                axial,
                radial,
                theta_r.to_radians(),
                moment.to_radians(),
                theta_m.to_radians(),
            )?;
            let solution = solve_bearing(&case, &geometry, &stiffness)?;
            let mut file = std::fs::File::create(&out)?;
            write_distribution_csv(&mut file, &distribution_rows(&solution))?;
            let r = solution.reactions;
            let report = SolveReport {
                engaged: solution.engaged_count(),
                fx_n: r.fx,
                fy_n: r.fy,
                fz_n: r.fz,
                mx_n_mm: r.mx,
                mx_n_m: r.mx / 1000.0,
                mz_n_mm: r.mz,
                mz_n_m: r.mz / 1000.0,
                tilt_moment_n_mm: r.tilt_moment(),
                tilt_moment_n_m: r.tilt_moment() / 1000.0,
                tilt_axis_deg: r.tilt_axis().to_degrees(),
            };
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
        Command::Sweep {
            geometry,
            stiffness,
            axis,
            max,
            steps,
            theta_r,
            theta_m,
            out,
        } => {
            let geometry = read_geometry(&geometry)?;
            let stiffness = read_stiffness(&stiffness)?;
            let axis: SweepAxis = axis.parse()?;
            // the CLI surface uses degrees for the tilt sweep range
            let max_internal = match axis {
                SweepAxis::Moment => max.to_radians(),
                _ => max,
            };
            let points = sweep(
                axis,
                max_internal,
                steps,
                theta_r.to_radians(),
                theta_m.to_radians(),
                &geometry,
                &stiffness,
            )?;
            let mut file = std::fs::File::create(&out)?;
            write_sweep_csv(&mut file, axis, &points)?;
            let fit = secant_stiffness(&points)?;
            let (secant, units) = match axis {
                SweepAxis::Moment => (moment_slope_nm_per_deg(fit.stiffness), "N·m/deg"),
                _ => (fit.stiffness, "N/mm"),
            };
            let report = SweepReport {
                axis: axis.to_string(),
                secant_stiffness: secant,
                units,
                max_relative_deviation: fit.max_deviation,
                steps,
            };
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {e}");
        std::process::exit(exit_code(&e));
    }
}
