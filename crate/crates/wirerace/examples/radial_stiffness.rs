//! Sweeps a pure radial displacement and compares the secant stiffness
//! against the axial one. With a 45 degree unloaded contact angle the
//! radial-to-axial stiffness ratio sits near one half: only the front
//! half of the set engages and each sector sees the cosine-projected
//! share of the shift.

use wirerace::analysis::{secant_stiffness, sweep, SweepAxis};
use wirerace::presets::{catalog_geometry, catalog_stiffness};

fn main() {
    let geometry = catalog_geometry();
    let stiffness = catalog_stiffness();

    let radial = sweep(SweepAxis::Radial, 0.05, 11, 0.0, 0.0, &geometry, &stiffness)
        .expect("radial sweep converges");

    println!("radial displacement sweep toward theta_R = 0");
    println!("{:>12} {:>14} {:>12} {:>8}", "delta_R mm", "F_rad N", "max N1 N", "engaged");
    for p in &radial {
        println!(
            "{:>12.4} {:>14.2} {:>12.2} {:>8}",
            p.displacement, p.reaction, p.max_normal_force, p.engaged
        );
    }

    let radial_fit = secant_stiffness(&radial).expect("radial fit");
    let axial = sweep(SweepAxis::Axial, 0.05, 11, 0.0, 0.0, &geometry, &stiffness)
        .expect("axial sweep converges");
    let axial_fit = secant_stiffness(&axial).expect("axial fit");

    println!();
    println!("radial secant stiffness {:.1} N/mm", radial_fit.stiffness);
    println!("axial secant stiffness  {:.1} N/mm", axial_fit.stiffness);
    println!("radial/axial ratio      {:.4}", radial_fit.stiffness / axial_fit.stiffness);
}
