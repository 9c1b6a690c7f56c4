//! End-to-end checks of the `wirerace` binary: exit codes, report JSON on
//! stdout, CSV artifacts on disk, and byte-level determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_wirerace"))
}

fn data(file: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(file)
}

fn stdout_json(output: &Output) -> serde_json::Value {
    serde_json::from_slice(&output.stdout).expect("stdout is a JSON report")
}

/// Probe table generated from the catalog constants; forces are exactly
/// k * deformation so the fit must return the constants bit for bit.
fn write_probe_csv(path: &Path) {
    let (k1, k2, k3) = (372_509.0_f64, 368_393.0_f64, 447_544.0_f64);
    let mut text = String::from("delta,f1,f2,f3,d1,d2\n");
    for j in 1..=6 {
        let d1 = 0.002 * f64::from(j);
        let d2 = 0.0015 * f64::from(j);
        let d3 = 0.0025 * f64::from(j);
        text.push_str(&format!(
            "{},{},{},{},{},{}\n",
            d3 + d1.hypot(d2),
            k1 * d1,
            k2 * d2,
            k3 * d3,
            d1,
            d2
        ));
    }
    std::fs::write(path, text).unwrap();
}

#[test]
fn calibrate_recovers_the_catalog_constants() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("probe.csv");
    let out = dir.path().join("stiffness.json");
    write_probe_csv(&input);
    let output = bin()
        .args(["calibrate", "--input"])
        .arg(&input)
        .arg("--out")
        .arg(&out)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let report = stdout_json(&output);
    for (key, expected) in [
        ("k1_n_per_mm", 372_509.0),
        ("k2_n_per_mm", 368_393.0),
        ("k3_n_per_mm", 447_544.0),
    ] {
        let got = report[key].as_f64().unwrap();
        assert!(
            (got - expected).abs() <= 1e-9 * expected,
            "{key}: {got} vs {expected}"
        );
    }
    assert_eq!(report["linearity_warning"], serde_json::json!(false));
    assert!(output.stderr.is_empty());
    // the written stiffness file carries the same constants
    let written: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let k1 = written["k1"].as_f64().unwrap();
    assert!((k1 - 372_509.0).abs() <= 1e-9 * 372_509.0, "k1 {k1}");
}

#[test]
fn calibrate_with_no_records_exits_3() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("empty.csv");
    std::fs::write(&input, "delta,f1,f2,f3,d1,d2\n").unwrap();
    let output = bin()
        .args(["calibrate", "--input"])
        .arg(&input)
        .arg("--out")
        .arg(dir.path().join("k.json"))
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("insufficient data"), "stderr: {stderr}");
}

#[test]
fn calibrate_with_missing_input_exits_2() {
    let dir = TempDir::new().unwrap();
    let output = bin()
        .args(["calibrate", "--input"])
        .arg(dir.path().join("nope.csv"))
        .arg("--out")
        .arg(dir.path().join("k.json"))
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn calibrate_with_impossible_split_exits_3() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("bad.csv");
    // wire-centre motion exceeds the applied displacement
    std::fs::write(
        &input,
        "delta,f1,f2,f3,d1,d2\n0.005,700,500,2000,0.004,0.004\n0.010,1400,1000,4000,0.008,0.008\n",
    )
    .unwrap();
    let output = bin()
        .args(["calibrate", "--input"])
        .arg(&input)
        .arg("--out")
        .arg(dir.path().join("k.json"))
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("must stay below"), "stderr: {stderr}");
}

#[test]
fn solve_zero_case_is_deterministic_and_unloaded() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("sectors.csv");
    let run = || {
        bin()
            .args(["solve", "--geometry"])
            .arg(data("geometry.json"))
            .arg("--stiffness")
            .arg(data("stiffness.json"))
            .arg("--out")
            .arg(&out)
            .output()
            .unwrap()
    };
    let first = run();
    assert_eq!(first.status.code(), Some(0));
    let report = stdout_json(&first);
    assert_eq!(report["engaged"], serde_json::json!(0));
    for key in ["fx_n", "fy_n", "fz_n", "mx_n_mm", "mz_n_mm"] {
        assert_eq!(report[key].as_f64(), Some(0.0), "{key}");
    }
    let csv_first = std::fs::read(&out).unwrap();
    let lines = csv_first.split(|&b| b == b'\n').count();
    // header + 94 sectors + trailing newline
    assert_eq!(lines, 96);

    let second = run();
    assert_eq!(second.stdout, first.stdout);
    assert_eq!(std::fs::read(&out).unwrap(), csv_first);
}

#[test]
fn solve_axial_case_matches_the_reference_stiffness() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("sectors.csv");
    let output = bin()
        .args(["solve", "--geometry"])
        .arg(data("geometry.json"))
        .arg("--stiffness")
        .arg(data("stiffness.json"))
        .args(["--axial", "0.05", "--out"])
        .arg(&out)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let report = stdout_json(&output);
    assert_eq!(report["engaged"], serde_json::json!(47));
    let secant = report["fy_n"].as_f64().unwrap() / 0.05;
    assert!(
        (secant - 2.538e6).abs() / 2.538e6 <= 0.03,
        "secant {secant}"
    );
    let csv = std::fs::read_to_string(&out).unwrap();
    assert!(csv.starts_with(
        "index,theta_deg,roller_type,engaged,normal_force_n,contact_angle_deg,force_angle_deg"
    ));
}

#[test]
fn solve_with_missing_geometry_exits_2() {
    let dir = TempDir::new().unwrap();
    let output = bin()
        .args(["solve", "--geometry"])
        .arg(dir.path().join("nope.json"))
        .arg("--stiffness")
        .arg(data("stiffness.json"))
        .arg("--out")
        .arg(dir.path().join("s.csv"))
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("nope.json"), "stderr: {stderr}");
}

#[test]
fn solve_outside_validity_exits_4() {
    let dir = TempDir::new().unwrap();
    let output = bin()
        .args(["solve", "--geometry"])
        .arg(data("geometry.json"))
        .arg("--stiffness")
        .arg(data("stiffness.json"))
        .args(["--axial", "22.0", "--radial", "15.0", "--out"])
        .arg(dir.path().join("s.csv"))
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(4));
}

#[test]
fn sweep_axial_reports_the_reference_stiffness() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("sweep.csv");
    let output = bin()
        .args(["sweep", "--geometry"])
        .arg(data("geometry.json"))
        .arg("--stiffness")
        .arg(data("stiffness.json"))
        .args(["--axis", "axial", "--max", "0.05", "--steps", "11", "--out"])
        .arg(&out)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let report = stdout_json(&output);
    assert_eq!(report["axis"], serde_json::json!("axial"));
    assert_eq!(report["units"], serde_json::json!("N/mm"));
    let secant = report["secant_stiffness"].as_f64().unwrap();
    assert!(
        (secant - 2.538e6).abs() / 2.538e6 <= 0.03,
        "secant {secant}"
    );
    let csv = std::fs::read_to_string(&out).unwrap();
    assert!(csv.starts_with("displacement_mm,reaction_n,max_normal_force_n,engaged"));
    assert_eq!(csv.lines().count(), 12);
}

#[test]
fn sweep_moment_reports_nm_per_degree() {
    let dir = TempDir::new().unwrap();
    let max_deg = 5e-4_f64.to_degrees();
    let output = bin()
        .args(["sweep", "--geometry"])
        .arg(data("geometry.json"))
        .arg("--stiffness")
        .arg(data("stiffness.json"))
        .args(["--axis", "moment", "--max"])
        .arg(format!("{max_deg}"))
        .args(["--steps", "11", "--out"])
        .arg(dir.path().join("sweep.csv"))
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let report = stdout_json(&output);
    assert_eq!(report["units"], serde_json::json!("N·m/deg"));
    let secant = report["secant_stiffness"].as_f64().unwrap();
    assert!(
        (secant - 977_518.0).abs() / 977_518.0 <= 0.03,
        "secant {secant}"
    );
    let csv = std::fs::read_to_string(dir.path().join("sweep.csv")).unwrap();
    assert!(csv.starts_with("tilt_deg,moment_n_m,max_normal_force_n,engaged"));
}

#[test]
fn sweep_with_one_step_exits_2() {
    let dir = TempDir::new().unwrap();
    let output = bin()
        .args(["sweep", "--geometry"])
        .arg(data("geometry.json"))
        .arg("--stiffness")
        .arg(data("stiffness.json"))
        .args(["--axis", "axial", "--max", "0.05", "--steps", "1", "--out"])
        .arg(dir.path().join("sweep.csv"))
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn sweep_with_unknown_axis_exits_2() {
    let dir = TempDir::new().unwrap();
    let output = bin()
        .args(["sweep", "--geometry"])
        .arg(data("geometry.json"))
        .arg("--stiffness")
        .arg(data("stiffness.json"))
        .args(["--axis", "sideways", "--max", "0.05", "--steps", "5", "--out"])
        .arg(dir.path().join("sweep.csv"))
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn unknown_flag_exits_2() {
    let output = bin().args(["solve", "--bogus"]).output().unwrap();
    assert_eq!(output.status.code(), Some(2));
}
