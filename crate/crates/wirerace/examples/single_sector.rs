//! Solves one roller-wire sector for an imposed displacement pair and
//! prints the converged equilibrium: contact interferences, loaded contact
//! angle, normal forces and the friction-shifted force resultant.
//!
//! The sector model has four unknowns (three interferences and the contact
//! angle). Friction enters with a sign fixed by whether the axial or the
//! radial displacement dominates; here the axial one does, so the wire
//! tends to roll toward steeper contact and friction resists it.

use wirerace::presets::{catalog_geometry, catalog_stiffness};
use wirerace::{friction_sign, solve_sector};

fn main() {
    let geometry = catalog_geometry();
    let stiffness = catalog_stiffness();
    let (axial, radial) = (0.04, 0.02);

    let sign = friction_sign(axial, radial, geometry.initial_contact_angle);
    let s = solve_sector(axial, radial, &geometry, &stiffness).expect("sector converges");

    println!("imposed sector displacements: axial {axial} mm, radial {radial} mm");
    println!("friction sign: {sign:+}");
    println!();
    println!("interferences  delta1 {:.6} mm", s.delta1);
    println!("               delta2 {:.6} mm", s.delta2);
    println!("               delta3 {:.6} mm", s.delta3);
    println!(
        "contact angle  {:.4} deg (from {:.1} deg unloaded)",
        s.alpha.to_degrees(),
        geometry.initial_contact_angle.to_degrees()
    );
    println!("normal forces  N1 {:.1} N, N2 {:.1} N", s.n1, s.n2);
    println!(
        "wire resultant F_T {:.1} N at {:.4} deg, normal component F_N {:.1} N",
        s.f_t,
        s.alpha_t.to_degrees(),
        s.f_n
    );
    println!(
        "friction offset alpha_T - alpha: {:.4} deg",
        (s.alpha_t - s.alpha).to_degrees()
    );
}
