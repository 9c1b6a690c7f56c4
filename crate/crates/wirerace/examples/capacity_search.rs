//! Finds the displacement at which the worst-loaded roller reaches a
//! prescribed contact normal force, for each displacement axis in turn.
//! Geometry and stiffness come from the JSON files shipped next to the
//! crate, the same files the command line tools consume.
//!
//! The search brackets the limit by doubling the displacement, then
//! bisects; moment capacities are reported as tilt in degrees.

use std::path::Path;

use wirerace::analysis::{capacity_search, SweepAxis};
use wirerace::config::{read_geometry, read_stiffness};

fn main() {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let geometry = read_geometry(&data.join("geometry.json")).expect("geometry json");
    let stiffness = read_stiffness(&data.join("stiffness.json")).expect("stiffness json");
    let limit = 3000.0;

    println!("displacement where the peak roller load reaches {limit} N");
    println!("{:>8} {:>16} {:>14} {:>12}", "axis", "displacement", "reaction", "peak F_N N");
    for axis in [SweepAxis::Axial, SweepAxis::Radial, SweepAxis::Moment] {
        let cap = capacity_search(axis, limit, 0.0, 0.0, &geometry, &stiffness)
            .expect("capacity bracket");
        let (displacement, reaction) = match axis {
            SweepAxis::Moment => (
                format!("{:.5} deg", cap.displacement.to_degrees()),
                format!("{:.1} N·m", cap.reaction / 1000.0),
            ),
            _ => (
                format!("{:.5} mm", cap.displacement),
                format!("{:.1} N", cap.reaction),
            ),
        };
        println!("{:>8} {:>16} {:>14} {:>12.1}", axis.to_string(), displacement, reaction, cap.max_normal_force);
    }
}
