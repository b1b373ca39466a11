//! Small floating-point helpers shared by the analytic modules.

use std::f64::consts::PI;

/// ζ(2) = π²/6.
pub const ZETA2: f64 = PI * PI / 6.0;

const PAIRWISE_BLOCK: usize = 16;

/// Pairwise (tree) summation in slice order.
///
/// The split points depend only on the length, so the result is a pure
/// function of the input sequence.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    if values.len() <= PAIRWISE_BLOCK {
        return values.iter().sum();
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}

/// `log log t`, the second iterated natural logarithm.
pub fn log2_iter(t: f64) -> f64 {
    t.ln().ln()
}

/// Ordinary least-squares slope of `ys` against `xs`.
///
/// Returns `None` with fewer than two points or zero spread in `xs`.
pub fn least_squares_slope(xs: &[f64], ys: &[f64]) -> Option<f64> {
    let n = xs.len();
    if n < 2 || n != ys.len() {
        return None;
    }
    let mean_x = xs.iter().sum::<f64>() / n as f64;
    let mean_y = ys.iter().sum::<f64>() / n as f64;
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for (x, y) in xs.iter().zip(ys) {
        sxy += (x - mean_x) * (y - mean_y);
        sxx += (x - mean_x) * (x - mean_x);
    }
    if sxx == 0.0 {
        return None;
    }
    Some(sxy / sxx)
}
