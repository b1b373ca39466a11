//! Averages of `χ_d(n)` over fundamental discriminants `|d| ≤ X` and their
//! square-indicator main term `(X/ζ(2))·∏_{p|n} p/(p+1)·𝟙_{n=□}`.
//!
//! Sums are exact integers accumulated segment by segment (see
//! [`crate::arith::sum_over_abs_window`]). `ε` only feeds the reported error
//! factors `f(n₀)`, `g(n₁)`.

use crate::arith::{factorize, is_square, largest_prime_factor, mobius, squarefree_decompose, sum_over_abs_window};
use crate::numeric::{least_squares_slope, ZETA2};
use crate::resonance::local_factor;
use crate::{Error, Result};

pub const DEFAULT_EPSILON: f64 = 0.1;

fn check_n(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("n", "must be >= 1"));
    }
    Ok(())
}

/// `Σ_{|d|≤X, d∈F} χ_d(n)`, both signs of `d`.
pub fn discriminant_char_average(scale: u64, n: u64) -> Result<i64> {
    if scale < 3 {
        return Err(Error::invalid("X", format!("must be >= 3, got {scale}")));
    }
    check_n(n)?;
    Ok(window_char_sum(0, scale, n))
}

/// `Σ_{lo<|d|≤hi, d∈F} χ_d(n)`.
pub fn window_char_sum(lo_exclusive: u64, hi: u64, n: u64) -> i64 {
    let n = n as i64;
    sum_over_abs_window(lo_exclusive, hi, |d| d.chi(n) as i64)
}

/// `(X/ζ(2))·∏_{p|n} p/(p+1)` for square `n`, else 0.
pub fn main_term(scale: u64, n: u64) -> Result<f64> {
    check_n(n)?;
    if !is_square(n) {
        return Ok(0.0);
    }
    Ok(scale as f64 / ZETA2 * local_factor(n))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorFactors {
    pub n0: u64,
    pub n1: u64,
    /// `exp((log n₀)^{1−ε})`
    pub f: f64,
    /// `Σ_{d|n₁} μ(d)²/d^{1/2+ε}`
    pub g: f64,
    /// `exp(P₊(n)^{1−ε})`; `None` for `n = 1`.
    pub f_bound: Option<f64>,
    /// `exp(P₊(n)^{1/2−ε})`; `None` for `n = 1`.
    pub g_bound: Option<f64>,
}

pub fn error_factors(n: u64, epsilon: f64) -> Result<ErrorFactors> {
    if !(epsilon > 0.0 && epsilon < 0.5) {
        return Err(Error::invalid("epsilon", format!("must lie in (0, 1/2), got {epsilon}")));
    }
    let s = squarefree_decompose(n)?;
    let f = (s.n0 as f64).ln().powf(1.0 - epsilon).exp();
    let g: f64 = divisors(s.n1)
        .into_iter()
        .map(|d| {
            let mu = mobius(d).expect("divisor >= 1") as f64;
            mu * mu / (d as f64).powf(0.5 + epsilon)
        })
        .sum();
    let top = if n >= 2 { Some(largest_prime_factor(n)? as f64) } else { None };
    Ok(ErrorFactors {
        n0: s.n0,
        n1: s.n1,
        f,
        g,
        f_bound: top.map(|p| p.powf(1.0 - epsilon).exp()),
        g_bound: top.map(|p| p.powf(0.5 - epsilon).exp()),
    })
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize(n) {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AverageReport {
    pub scale: u64,
    pub n: u64,
    pub exact: i64,
    pub main: f64,
    pub error: f64,
    pub f_n0: f64,
    pub g_n1: f64,
    pub epsilon: f64,
}

pub fn average_report(scale: u64, n: u64, epsilon: f64) -> Result<AverageReport> {
    let factors = error_factors(n, epsilon)?;
    let exact = discriminant_char_average(scale, n)?;
    let main = main_term(scale, n)?;
    Ok(AverageReport {
        scale,
        n,
        exact,
        main,
        error: (exact as f64 - main).abs(),
        f_n0: factors.f,
        g_n1: factors.g,
        epsilon,
    })
}

/// Least-squares slope of `log|exact − main|` against `log X`.
///
/// Points with zero error are dropped; at least three must survive.
pub fn fit_reports(reports: &[AverageReport]) -> Result<f64> {
    let (xs, ys): (Vec<f64>, Vec<f64>) = reports
        .iter()
        .filter(|r| r.error > 0.0)
        .map(|r| ((r.scale as f64).ln(), r.error.ln()))
        .unzip();
    if xs.len() < 3 {
        return Err(Error::DegenerateFit { surviving: xs.len() });
    }
    least_squares_slope(&xs, &ys).ok_or(Error::DegenerateFit { surviving: xs.len() })
}

/// Empirical growth exponent of the averaging error for fixed `n`.
pub fn error_exponent_fit(n: u64, scales: &[u64]) -> Result<f64> {
    if scales.len() < 3 {
        return Err(Error::invalid("X_values", format!("need at least 3 values, got {}", scales.len())));
    }
    if scales.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid("X_values", "must be strictly ascending"));
    }
    let reports = scales
        .iter()
        .map(|&x| average_report(x, n, DEFAULT_EPSILON))
        .collect::<Result<Vec<_>>>()?;
    fit_reports(&reports)
}
