//! Proportional least-squares fitting for force-displacement records.
//!
//! The contact model is linear through the origin by construction, so the
//! fits here have a single parameter: `F = k·x` with
//! `k = Σ F_j·x_j / Σ x_j²`. The companion deviation metric reports how far
//! the records stray from that line, which doubles as a linearity check.

/// Least-squares slope of a line through the origin.
///
/// Returns `None` when every abscissa is zero (the slope is undefined).
pub fn slope_through_origin(points: &[(f64, f64)]) -> Option<f64> {
    let mut num = 0.0;
    let mut den = 0.0;
    for &(x, f) in points {
        num += f * x;
        den += x * x;
    }
    if den == 0.0 {
        None
    } else {
        Some(num / den)
    }
}

/// Largest relative deviation of the records from the line `F = slope·x`.
///
/// Each record's deviation is scaled by the larger of its observed and
/// predicted force so the metric reads directly as a fraction; records at
/// the origin contribute zero.
pub fn max_relative_deviation(points: &[(f64, f64)], slope: f64) -> f64 {
    let mut worst = 0.0_f64;
    for &(x, f) in points {
        let predicted = slope * x;
        let scale = f.abs().max(predicted.abs());
        if scale > 0.0 {
            worst = worst.max((f - predicted).abs() / scale);
        }
    }
    worst
}
