//! Engineering outputs on top of the bearing solver: displacement sweeps,
//! secant stiffness constants, per-roller load distribution tables, and a
//! capacity search against a normal-force limit.
//!
//! Everything here works in the library's native units (mm, N, N·mm, rad).
//! The CSV writers are the one exception: they target the command-line
//! surface, so angles go out in degrees and moment-sweep reactions in N·m,
//! all floats fixed to 6 significant digits for byte-reproducible output.

use std::io::Write;
use std::str::FromStr;

use crate::assembly::{solve_bearing, BearingSolution};
use crate::error::{Error, Result};
use crate::model::{BearingGeometry, ContactStiffness, GlobalReactions, LoadCase, RollerType};
use crate::regression::{max_relative_deviation, slope_through_origin};

/// Which single displacement component a sweep or capacity search drives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepAxis {
    /// Axial displacement, mm; conjugate reaction Fy, N.
    Axial,
    /// Radial displacement toward theta_r, mm; conjugate reaction the force
    /// component toward theta_r, N.
    Radial,
    /// Tilt about the theta_m axis, rad; conjugate reaction the moment
    /// about that axis, N·mm.
    Moment,
}

impl FromStr for SweepAxis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "axial" => Ok(SweepAxis::Axial),
            "radial" => Ok(SweepAxis::Radial),
            "moment" => Ok(SweepAxis::Moment),
            other => Err(Error::InvalidInput(format!(
                "unknown sweep axis {other:?}; expected axial, radial or moment"
            ))),
        }
    }
}

impl std::fmt::Display for SweepAxis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SweepAxis::Axial => write!(f, "axial"),
            SweepAxis::Radial => write!(f, "radial"),
            SweepAxis::Moment => write!(f, "moment"),
        }
    }
}

impl SweepAxis {
    /// Load case for one displacement level along this axis.
    pub fn load_case(&self, displacement: f64, theta_r: f64, theta_m: f64) -> Result<LoadCase> {
        match self {
            SweepAxis::Axial => LoadCase::new(displacement, 0.0, 0.0, 0.0, 0.0),
            SweepAxis::Radial => LoadCase::new(0.0, displacement, theta_r, 0.0, 0.0),
            SweepAxis::Moment => LoadCase::new(0.0, 0.0, 0.0, displacement, theta_m),
        }
    }

    /// Reaction component conjugate to this axis' displacement.
    pub fn conjugate_reaction(
        &self,
        reactions: &GlobalReactions,
        theta_r: f64,
        theta_m: f64,
    ) -> f64 {
        match self {
            SweepAxis::Axial => reactions.fy,
            SweepAxis::Radial => reactions.radial_toward(theta_r),
            SweepAxis::Moment => reactions.moment_about(theta_m),
        }
    }

    /// Unit of the swept displacement as printed on the CLI surface.
    pub fn surface_units(&self) -> (&'static str, &'static str) {
        match self {
            SweepAxis::Axial | SweepAxis::Radial => ("mm", "N"),
            SweepAxis::Moment => ("deg", "N·m"),
        }
    }
}

/// One sweep row: imposed displacement and the conjugate reaction, plus the
/// load-severity markers used for capacity checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    /// Displacement in mm (axial, radial) or rad (moment).
    pub displacement: f64,
    /// Conjugate reaction in N (axial, radial) or N·mm (moment).
    pub reaction: f64,
    /// Largest roller-wire normal force across the sectors, N.
    pub max_normal_force: f64,
    /// Number of engaged sectors.
    pub engaged: usize,
}

/// Solves the bearing at `steps` equally spaced displacements from 0 to
/// `max_displacement` inclusive.
///
/// The origin is always part of the table, which anchors the secant fit.
/// Solver failures abort the sweep tagged with the step index.
pub fn sweep(
    axis: SweepAxis,
    max_displacement: f64,
    steps: usize,
    theta_r: f64,
    theta_m: f64,
    geometry: &BearingGeometry,
    stiffness: &ContactStiffness,
) -> Result<Vec<SweepPoint>> {
    if steps < 2 {
        return Err(Error::InvalidInput(format!(
            "sweep needs at least 2 steps, got {steps}"
        )));
    }
    if !(max_displacement > 0.0) || !max_displacement.is_finite() {
        return Err(Error::InvalidInput(format!(
            "sweep maximum displacement must be positive, got {max_displacement}"
        )));
    }
    let mut points = Vec::with_capacity(steps);
    for step in 0..steps {
        let displacement = max_displacement * step as f64 / (steps - 1) as f64;
        let case = axis.load_case(displacement, theta_r, theta_m)?;
        let solution =
            solve_bearing(&case, geometry, stiffness).map_err(|e| e.in_sweep_step(step))?;
        points.push(SweepPoint {
            displacement,
            reaction: axis.conjugate_reaction(&solution.reactions, theta_r, theta_m),
            max_normal_force: solution.max_normal_force(),
            engaged: solution.engaged_count(),
        });
    }
    Ok(points)
}

/// Origin-anchored secant stiffness of a sweep table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecantFit {
    /// Slope in N/mm (axial, radial) or N·mm/rad (moment).
    pub stiffness: f64,
    /// Largest relative deviation of the table from the secant line; small
    /// values confirm near-linear behaviour.
    pub max_deviation: f64,
}

/// Fits the least-squares line through the origin over a sweep table.
pub fn secant_stiffness(points: &[SweepPoint]) -> Result<SecantFit> {
    if points.len() < 2 {
        return Err(Error::InsufficientData(format!(
            "secant fit needs at least 2 sweep rows, got {}",
            points.len()
        )));
    }
    if !points.iter().any(|p| p.displacement == 0.0) {
        return Err(Error::InsufficientData(
            "secant fit needs the unloaded origin row".into(),
        ));
    }
    let pairs: Vec<(f64, f64)> = points.iter().map(|p| (p.displacement, p.reaction)).collect();
    let Some(slope) = slope_through_origin(&pairs) else {
        return Err(Error::InsufficientData(
            "sweep rows have no displacement range to fit over".into(),
        ));
    };
    Ok(SecantFit {
        stiffness: slope,
        max_deviation: max_relative_deviation(&pairs, slope),
    })
}

/// Converts a moment-sweep slope from native N·mm/rad to the N·m/deg the
/// CLI reports.
pub fn moment_slope_nm_per_deg(slope_nmm_per_rad: f64) -> f64 {
    slope_nmm_per_rad * std::f64::consts::PI / 180.0 / 1000.0
}

/// One row of the per-roller load distribution table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistributionRow {
    pub index: usize,
    /// Ring angle, rad.
    pub theta: f64,
    pub roller_type: RollerType,
    pub engaged: bool,
    /// Roller-wire contact normal force, N (zero when disengaged).
    pub normal_force: f64,
    /// Loaded contact angle, rad.
    pub alpha: f64,
    /// Direction of the wire-ring force resultant, rad.
    pub alpha_t: f64,
}

/// Per-roller normal force and contact angles for one load case, in ring
/// angle order.
pub fn distribution(
    case: &LoadCase,
    geometry: &BearingGeometry,
    stiffness: &ContactStiffness,
) -> Result<Vec<DistributionRow>> {
    let solution = solve_bearing(case, geometry, stiffness)?;
    Ok(distribution_rows(&solution))
}

/// Extracts the distribution table from an already computed solution.
pub fn distribution_rows(solution: &BearingSolution) -> Vec<DistributionRow> {
    solution
        .sectors
        .iter()
        .map(|s| DistributionRow {
            index: s.kinematics.index,
            theta: s.kinematics.theta,
            roller_type: s.kinematics.roller_type,
            engaged: s.kinematics.engaged,
            normal_force: s.state.f_n,
            alpha: s.state.alpha,
            alpha_t: s.state.alpha_t,
        })
        .collect()
}

/// Displacement level at which the worst-loaded roller reaches a given
/// normal force.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Capacity {
    /// Displacement in mm (axial, radial) or rad (moment).
    pub displacement: f64,
    /// Conjugate reaction at that displacement.
    pub reaction: f64,
    /// Achieved maximum normal force (within 0.1% of the requested limit).
    pub max_normal_force: f64,
}

/// Capacity tolerance: the search stops when the worst normal force is
/// within this fraction of the limit.
pub const CAPACITY_TOLERANCE: f64 = 1e-3;

/// Finds the displacement along `axis` at which the largest sector normal
/// force equals `normal_force_limit`, by doubling to bracket and bisecting.
///
/// Errors with `NotReached` when the limit cannot be attained inside the
/// model's validity range (the roller-wire interference bound trips first).
pub fn capacity_search(
    axis: SweepAxis,
    normal_force_limit: f64,
    theta_r: f64,
    theta_m: f64,
    geometry: &BearingGeometry,
    stiffness: &ContactStiffness,
) -> Result<Capacity> {
    if !(normal_force_limit > 0.0) || !normal_force_limit.is_finite() {
        return Err(Error::InvalidInput(format!(
            "normal force limit must be positive, got {normal_force_limit}"
        )));
    }
    let probe = |d: f64| -> Result<(f64, f64)> {
        let case = axis.load_case(d, theta_r, theta_m)?;
        let solution = solve_bearing(&case, geometry, stiffness)?;
        Ok((
            solution.max_normal_force(),
            axis.conjugate_reaction(&solution.reactions, theta_r, theta_m),
        ))
    };
    let out_of_validity = |e: &Error| {
        matches!(e,
            Error::Sector { source, .. } if matches!(**source, Error::OutsideValidity { .. }))
    };

    // double until the limit is bracketed
    let mut lo = 0.0;
    let mut hi = 1e-6;
    loop {
        match probe(hi) {
            Ok((f_n, _)) if f_n >= normal_force_limit => break,
            Ok(_) => {
                lo = hi;
                hi *= 2.0;
                if hi > 1e6 {
                    return Err(Error::NotReached(format!(
                        "normal force limit {normal_force_limit} N not reached at any \
                         displacement up to {lo}"
                    )));
                }
            }
            Err(e) if out_of_validity(&e) => {
                return Err(Error::NotReached(format!(
                    "normal force limit {normal_force_limit} N lies outside the model's \
                     validity range (reached displacement {hi} first)"
                )));
            }
            Err(e) => return Err(e),
        }
    }

    // bisect on the monotone worst normal force
    let mut best = None;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let (f_n, reaction) = probe(mid)?;
        best = Some(Capacity {
            displacement: mid,
            reaction,
            max_normal_force: f_n,
        });
        if (f_n - normal_force_limit).abs() <= CAPACITY_TOLERANCE * normal_force_limit {
            return Ok(best.unwrap());
        }
        if f_n < normal_force_limit {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= f64::EPSILON * hi {
            break;
        }
    }
    Err(Error::NotReached(format!(
        "bisection stalled before matching the normal force limit {normal_force_limit} N \
         (best {:?})",
        best
    )))
}

/// Fixed 6-significant-digit float rendering shared by every CSV writer,
/// so identical runs emit identical bytes.
pub(crate) fn csv_float(x: f64) -> String {
    format!("{x:.5e}")
}

/// Writes a sweep table as CSV. Axial and radial sweeps go out in mm and N;
/// moment sweeps in degrees and N·m.
pub fn write_sweep_csv<W: Write>(writer: &mut W, axis: SweepAxis, points: &[SweepPoint]) -> Result<()> {
    match axis {
        SweepAxis::Axial | SweepAxis::Radial => {
            writeln!(writer, "displacement_mm,reaction_n,max_normal_force_n,engaged")?;
            for p in points {
                writeln!(
                    writer,
                    "{},{},{},{}",
                    csv_float(p.displacement),
                    csv_float(p.reaction),
                    csv_float(p.max_normal_force),
                    p.engaged
                )?;
            }
        }
        SweepAxis::Moment => {
            writeln!(writer, "tilt_deg,moment_n_m,max_normal_force_n,engaged")?;
            for p in points {
                writeln!(
                    writer,
                    "{},{},{},{}",
                    csv_float(p.displacement.to_degrees()),
                    csv_float(p.reaction / 1000.0),
                    csv_float(p.max_normal_force),
                    p.engaged
                )?;
            }
        }
    }
    Ok(())
}

/// Writes a per-roller distribution table as CSV, angles in degrees.
pub fn write_distribution_csv<W: Write>(writer: &mut W, rows: &[DistributionRow]) -> Result<()> {
    writeln!(
        writer,
        "index,theta_deg,roller_type,engaged,normal_force_n,contact_angle_deg,force_angle_deg"
    )?;
    for r in rows {
        writeln!(
            writer,
            "{},{},{},{},{},{},{}",
            r.index,
            csv_float(r.theta.to_degrees()),
            r.roller_type,
            r.engaged,
            csv_float(r.normal_force),
            csv_float(r.alpha.to_degrees()),
            csv_float(r.alpha_t.to_degrees())
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn axis_names_round_trip() {
        for axis in [SweepAxis::Axial, SweepAxis::Radial, SweepAxis::Moment] {
            assert_eq!(axis.to_string().parse::<SweepAxis>().unwrap(), axis);
        }
        assert!("diagonal".parse::<SweepAxis>().is_err());
    }

    #[test]
    fn two_step_axial_sweep_brackets_the_range() {
        let g = presets::catalog_geometry();
        let k = presets::catalog_stiffness();
        let pts = sweep(SweepAxis::Axial, 0.05, 2, 0.0, 0.0, &g, &k).unwrap();
        assert_eq!(pts.len(), 2);
        assert_eq!(pts[0].displacement, 0.0);
        assert_eq!(pts[0].reaction, 0.0);
        assert_eq!(pts[0].engaged, 0);
        assert_eq!(pts[1].displacement, 0.05);
        assert!(pts[1].reaction > 0.0);
        assert_eq!(pts[1].engaged, 47);
    }

    #[test]
    fn sweep_rejects_bad_arguments() {
        let g = presets::catalog_geometry();
        let k = presets::catalog_stiffness();
        assert!(sweep(SweepAxis::Axial, 0.05, 1, 0.0, 0.0, &g, &k).is_err());
        assert!(sweep(SweepAxis::Axial, 0.0, 5, 0.0, 0.0, &g, &k).is_err());
        assert!(sweep(SweepAxis::Axial, -0.1, 5, 0.0, 0.0, &g, &k).is_err());
    }

    #[test]
    fn sweep_reaction_is_strictly_increasing() {
        let g = presets::catalog_geometry();
        let k = presets::catalog_stiffness();
        for axis in [SweepAxis::Axial, SweepAxis::Radial] {
            let pts = sweep(axis, 0.05, 8, 0.0, 0.0, &g, &k).unwrap();
            for w in pts.windows(2) {
                assert!(w[1].reaction > w[0].reaction);
            }
        }
        let pts = sweep(SweepAxis::Moment, 5e-4, 8, 0.0, 0.0, &g, &k).unwrap();
        for w in pts.windows(2) {
            assert!(w[1].reaction > w[0].reaction);
        }
    }

    #[test]
    fn axial_secant_stiffness_near_reference() {
        let g = presets::catalog_geometry();
        let k = presets::catalog_stiffness();
        let pts = sweep(SweepAxis::Axial, 0.05, 11, 0.0, 0.0, &g, &k).unwrap();
        let fit = secant_stiffness(&pts).unwrap();
        assert!((fit.stiffness - 2.538e6).abs() / 2.538e6 < 0.03, "{}", fit.stiffness);
        assert!(fit.max_deviation < 0.02);
    }

    #[test]
    fn radial_secant_stiffness_near_reference() {
        let g = presets::catalog_geometry();
        let k = presets::catalog_stiffness();
        let pts = sweep(SweepAxis::Radial, 0.05, 11, 0.0, 0.0, &g, &k).unwrap();
        let fit = secant_stiffness(&pts).unwrap();
        assert!((fit.stiffness - 1.269e6).abs() / 1.269e6 < 0.03, "{}", fit.stiffness);
        assert!(fit.max_deviation < 0.02);
    }

    #[test]
    fn moment_secant_stiffness_near_reference() {
        let g = presets::catalog_geometry();
        let k = presets::catalog_stiffness();
        let pts = sweep(SweepAxis::Moment, 5e-4, 11, 0.0, 0.0, &g, &k).unwrap();
        let fit = secant_stiffness(&pts).unwrap();
        let per_deg = moment_slope_nm_per_deg(fit.stiffness);
        assert!((per_deg - 977518.0).abs() / 977518.0 < 0.03, "{per_deg}");
    }

    #[test]
    fn secant_fit_preconditions() {
        let origin = SweepPoint {
            displacement: 0.0,
            reaction: 0.0,
            max_normal_force: 0.0,
            engaged: 0,
        };
        let loaded = SweepPoint {
            displacement: 2.0,
            reaction: 10.0,
            max_normal_force: 1.0,
            engaged: 4,
        };
        let fit = secant_stiffness(&[origin, loaded]).unwrap();
        assert_eq!(fit.stiffness, 5.0);
        assert!(fit.max_deviation < 1e-15);
        assert!(secant_stiffness(&[loaded]).is_err());
        assert!(secant_stiffness(&[loaded, loaded]).is_err());
    }

    #[test]
    fn axial_distribution_shape() {
        let g = presets::catalog_geometry();
        let k = presets::catalog_stiffness();
        let rows = distribution(&LoadCase::pure_axial(0.05), &g, &k).unwrap();
        assert_eq!(rows.len(), 94);
        let f = rows[0].normal_force;
        assert!(f > 0.0);
        for r in &rows {
            match r.roller_type {
                RollerType::A => {
                    assert!(r.engaged);
                    assert_eq!(r.normal_force, f);
                }
                RollerType::B => {
                    assert!(!r.engaged);
                    assert_eq!(r.normal_force, 0.0);
                }
            }
        }
    }

    #[test]
    fn radial_distribution_peaks_toward_the_load() {
        let g = presets::catalog_geometry();
        let k = presets::catalog_stiffness();
        let rows =
            distribution(&LoadCase::pure_radial(0.05, 0.0).unwrap(), &g, &k).unwrap();
        let peak = rows
            .iter()
            .max_by(|a, b| a.normal_force.total_cmp(&b.normal_force))
            .unwrap();
        assert_eq!(peak.index, 0);
        for r in &rows {
            if r.theta.cos() < 0.0 {
                assert!(!r.engaged);
                assert_eq!(r.normal_force, 0.0);
            } else if r.theta.cos() > 0.0 {
                assert!(r.engaged);
                assert!(r.alpha > g.initial_contact_angle);
            }
        }
    }

    #[test]
    fn moment_distribution_peaks_quarter_turn_from_the_axis() {
        let g = presets::catalog_geometry();
        let k = presets::catalog_stiffness();
        let rows =
            distribution(&LoadCase::pure_moment(5e-4, FRAC_PI_2), &g, &k).unwrap();
        // tilt about 90 deg: peak axial displacement lands at theta = 0
        // (type A) and theta = 180 deg (type B, sector 47)
        let peak_a = rows
            .iter()
            .filter(|r| r.roller_type == RollerType::A)
            .max_by(|a, b| a.normal_force.total_cmp(&b.normal_force))
            .unwrap();
        let peak_b = rows
            .iter()
            .filter(|r| r.roller_type == RollerType::B)
            .max_by(|a, b| a.normal_force.total_cmp(&b.normal_force))
            .unwrap();
        assert_eq!(peak_a.index, 0);
        assert_eq!(peak_b.index, 47);
        assert!((peak_a.normal_force - peak_b.normal_force).abs() < 0.02 * peak_a.normal_force);
    }

    #[test]
    fn capacity_for_tiny_limit_is_tiny() {
        let g = presets::catalog_geometry();
        let k = presets::catalog_stiffness();
        let cap = capacity_search(SweepAxis::Axial, 1e-6, 0.0, 0.0, &g, &k).unwrap();
        assert!(cap.displacement < 1e-9, "{}", cap.displacement);
        assert!((cap.max_normal_force - 1e-6).abs() <= 1e-9);
    }

    #[test]
    fn doubling_the_limit_roughly_doubles_the_load() {
        let g = presets::catalog_geometry();
        let k = presets::catalog_stiffness();
        let one = capacity_search(SweepAxis::Axial, 5000.0, 0.0, 0.0, &g, &k).unwrap();
        let two = capacity_search(SweepAxis::Axial, 10000.0, 0.0, 0.0, &g, &k).unwrap();
        let ratio = two.reaction / one.reaction;
        assert!((ratio - 2.0).abs() < 0.1, "ratio {ratio}");
    }

    #[test]
    fn capacity_is_consistent_with_the_distribution_table() {
        let g = presets::catalog_geometry();
        let k = presets::catalog_stiffness();
        let limit = 8000.0;
        let cap = capacity_search(SweepAxis::Radial, limit, 0.0, 0.0, &g, &k).unwrap();
        let case = LoadCase::pure_radial(cap.displacement, 0.0).unwrap();
        let rows = distribution(&case, &g, &k).unwrap();
        let max_f = rows.iter().fold(0.0_f64, |m, r| m.max(r.normal_force));
        assert_eq!(max_f, cap.max_normal_force);
        assert!((max_f - limit).abs() <= CAPACITY_TOLERANCE * limit);
    }

    #[test]
    fn unreachable_limit_is_reported() {
        let g = presets::catalog_geometry();
        let k = presets::catalog_stiffness();
        let err = capacity_search(SweepAxis::Axial, 1e9, 0.0, 0.0, &g, &k).unwrap_err();
        assert!(matches!(err, Error::NotReached(_)), "{err}");
    }

    #[test]
    fn csv_output_is_deterministic_and_headed() {
        let g = presets::catalog_geometry();
        let k = presets::catalog_stiffness();
        let pts = sweep(SweepAxis::Axial, 0.02, 3, 0.0, 0.0, &g, &k).unwrap();
        let mut a = Vec::new();
        let mut b = Vec::new();
        write_sweep_csv(&mut a, SweepAxis::Axial, &pts).unwrap();
        write_sweep_csv(&mut b, SweepAxis::Axial, &pts).unwrap();
        assert_eq!(a, b);
        let text = String::from_utf8(a).unwrap();
        assert!(text.starts_with("displacement_mm,reaction_n,max_normal_force_n,engaged\n"));
        assert_eq!(text.lines().count(), 4);
        assert!(text.contains("0.00000e0,0.00000e0,0.00000e0,0"));

        let rows = distribution(&LoadCase::pure_axial(0.02), &g, &k).unwrap();
        let mut d = Vec::new();
        write_distribution_csv(&mut d, &rows).unwrap();
        let text = String::from_utf8(d).unwrap();
        assert!(text.starts_with(
            "index,theta_deg,roller_type,engaged,normal_force_n,contact_angle_deg,force_angle_deg\n"
        ));
        assert_eq!(text.lines().count(), 95);
        assert!(text.contains(",A,true,"));
        assert!(text.contains(",B,false,"));
    }

    #[test]
    fn csv_float_is_six_significant_digits() {
        assert_eq!(csv_float(2538000.0), "2.53800e6");
        assert_eq!(csv_float(0.0), "0.00000e0");
        assert_eq!(csv_float(-0.0123456789), "-1.23457e-2");
    }
}
