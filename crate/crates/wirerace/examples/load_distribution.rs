//! Solves a combined axial + radial + tilt case and prints the per-roller
//! load distribution. Alternating rollers carry opposite axial senses, so
//! the engaged set interleaves type A and type B around the ring and the
//! normal force peaks where the radial shift and the tilt add up.

use wirerace::analysis::distribution_rows;
use wirerace::assembly::solve_bearing;
use wirerace::presets::{catalog_geometry, catalog_stiffness};
use wirerace::LoadCase;

fn main() {
    let geometry = catalog_geometry();
    let stiffness = catalog_stiffness();
    let case = LoadCase::new(0.03, 0.02, 0.0, 2e-4, 0.0).expect("valid load case");

    let solution = solve_bearing(&case, &geometry, &stiffness).expect("bearing converges");
    let rows = distribution_rows(&solution);

    println!(
        "combined case: delta_A {} mm, delta_R {} mm at theta_R 0, phi_M {} rad at theta_M 0",
        case.axial, case.radial, case.tilt
    );
    println!("{:>5} {:>10} {:>4} {:>8} {:>10} {:>10}", "idx", "theta deg", "type", "engaged", "F_N N", "alpha deg");
    for row in rows.iter().step_by(8) {
        println!(
            "{:>5} {:>10.2} {:>4} {:>8} {:>10.2} {:>10.4}",
            row.index,
            row.theta.to_degrees(),
            row.roller_type.to_string(),
            row.engaged,
            row.normal_force,
            row.alpha.to_degrees()
        );
    }

    let peak = rows
        .iter()
        .max_by(|a, b| a.normal_force.total_cmp(&b.normal_force))
        .expect("rows");
    let r = &solution.reactions;
    println!();
    println!(
        "engaged {} of {}, peak F_N {:.2} N at sector {} ({:.2} deg, type {})",
        solution.engaged_count(),
        geometry.roller_count,
        peak.normal_force,
        peak.index,
        peak.theta.to_degrees(),
        peak.roller_type
    );
    println!(
        "reactions: F_y {:.2} N, radial {:.2} N toward theta_R, tilt moment {:.2} N·m about {:.2} deg",
        r.fy,
        r.radial_toward(case.theta_r),
        r.tilt_moment() / 1000.0,
        r.tilt_axis().to_degrees()
    );
}
