//! Sweeps a pure tilt about a diametral axis and reports the secant
//! tilting stiffness in N·m per degree. Cross-checks the result against
//! the thin-ring estimate K_M = K_a * D_pw^2 / 8, which treats the axial
//! spring field as a continuous ring: both land within a percent for the
//! catalog bearing.

use wirerace::analysis::{moment_slope_nm_per_deg, secant_stiffness, sweep, SweepAxis};
use wirerace::presets::{catalog_geometry, catalog_stiffness};

fn main() {
    let geometry = catalog_geometry();
    let stiffness = catalog_stiffness();
    let max_tilt = 5e-4;

    let points = sweep(SweepAxis::Moment, max_tilt, 11, 0.0, 0.0, &geometry, &stiffness)
        .expect("moment sweep converges");

    println!("tilt sweep about theta_M = 0");
    println!("{:>12} {:>14} {:>12} {:>8}", "phi_M rad", "M N·mm", "max N1 N", "engaged");
    for p in &points {
        println!(
            "{:>12.3e} {:>14.2} {:>12.2} {:>8}",
            p.displacement, p.reaction, p.max_normal_force, p.engaged
        );
    }

    let fit = secant_stiffness(&points).expect("moment fit");
    let moment_per_deg = moment_slope_nm_per_deg(fit.stiffness);

    let axial = sweep(SweepAxis::Axial, 0.05, 11, 0.0, 0.0, &geometry, &stiffness)
        .expect("axial sweep converges");
    let axial_fit = secant_stiffness(&axial).expect("axial fit");
    let ring = axial_fit.stiffness * geometry.pitch_diameter.powi(2) / 8.0;
    let ring_per_deg = moment_slope_nm_per_deg(ring);

    println!();
    println!("tilting stiffness   {moment_per_deg:.0} N·m/deg");
    println!("thin-ring estimate  {ring_per_deg:.0} N·m/deg");
    println!(
        "relative gap        {:.3}%",
        (moment_per_deg / ring_per_deg - 1.0).abs() * 100.0
    );
}
