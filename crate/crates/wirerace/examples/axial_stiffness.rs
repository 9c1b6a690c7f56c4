//! Sweeps a pure axial displacement from zero to 0.05 mm, prints the
//! reaction table and reports the secant stiffness of the last point.
//!
//! For the catalog bearing every second roller carries a pure axial push
//! (type A), the other half separates, so exactly half the set is engaged
//! at every nonzero step.

use wirerace::analysis::{secant_stiffness, sweep, SweepAxis};
use wirerace::presets::{catalog_geometry, catalog_stiffness};

fn main() {
    let geometry = catalog_geometry();
    let stiffness = catalog_stiffness();

    let points = sweep(SweepAxis::Axial, 0.05, 11, 0.0, 0.0, &geometry, &stiffness)
        .expect("axial sweep converges");

    println!("axial displacement sweep, {} rollers", geometry.roller_count);
    println!("{:>12} {:>14} {:>12} {:>8}", "delta_A mm", "F_y N", "max N1 N", "engaged");
    for p in &points {
        println!(
            "{:>12.4} {:>14.2} {:>12.2} {:>8}",
            p.displacement, p.reaction, p.max_normal_force, p.engaged
        );
    }

    let fit = secant_stiffness(&points).expect("secant fit");
    println!();
    println!("secant stiffness {:.1} N/mm", fit.stiffness);
    println!("max deviation from the secant line {:.3}%", fit.max_deviation * 100.0);
}
