//! Round-trips a calibration: generates a synthetic press-probe CSV with
//! half a percent of multiplicative force noise, reads it back and fits
//! the three contact stiffness constants. The fitted values land within
//! the noise level of the catalog constants that generated the data.
//!
//! Each probe record stores the total interference `delta` along the
//! press direction together with the three reaction forces and the two
//! lateral displacement readings; the third interference is recovered as
//! delta - hypot(d1, d2) before fitting.

use std::fs::File;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use wirerace::calibration::{fit_stiffness, read_records_from_path, write_records, CalibrationRecord};
use wirerace::presets::catalog_stiffness;

fn main() {
    let truth = catalog_stiffness();
    let mut rng = StdRng::seed_from_u64(7);
    let mut noisy = |value: f64| value * (1.0 + rng.gen_range(-0.005..0.005));

    let mut records = Vec::new();
    for level in 1..=10 {
        let d1 = 0.004 * level as f64;
        let d2 = 0.003 * level as f64;
        let d3 = 0.005 * level as f64;
        records.push(CalibrationRecord {
            delta: d3 + d1.hypot(d2),
            f1: noisy(truth.k1 * d1),
            f2: noisy(truth.k2 * d2),
            f3: noisy(truth.k3 * d3),
            d1,
            d2,
        });
    }

    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("probe.csv");
    write_records(File::create(&path).expect("create csv"), &records).expect("write csv");

    let parsed = read_records_from_path(&path).expect("read csv");
    let fit = fit_stiffness(&parsed).expect("fit");

    println!("fitted {} probe records from {}", parsed.len(), path.display());
    println!("{:>4} {:>14} {:>14} {:>10}", "k", "fitted N/mm", "true N/mm", "error %");
    for (name, fitted, true_k) in [
        ("k1", fit.stiffness.k1, truth.k1),
        ("k2", fit.stiffness.k2, truth.k2),
        ("k3", fit.stiffness.k3, truth.k3),
    ] {
        println!(
            "{:>4} {:>14.1} {:>14.1} {:>10.3}",
            name,
            fitted,
            true_k,
            (fitted / true_k - 1.0).abs() * 100.0
        );
    }
    println!();
    println!("max deviation from linear fit {:.3}%", fit.deviations.max() * 100.0);
    println!("linearity warning: {}", fit.linearity_warning());
}
