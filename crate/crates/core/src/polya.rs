//! Gauss sums and the truncated Pólya Fourier expansion
//!
//! ```text
//! Σ_{n≤αq} χ(n) ≈ τ(χ)/(2πi) · Σ_{1≤|m|≤z} χ̄(m)/m · (1 − e(−αm))
//! ```
//!
//! together with its split `τ/(2πi)·C_d(z) + τ/(2π)·S_d(z)` into a cosine part
//! and a sine part. For real `χ_d` the terms `m` and `−m` are merged before
//! accumulation: with `χ(−m) = χ(−1)χ(m)` the pair contributes
//! `(1 − χ(−1))·χ(m)(1 − cos 2πm/x)/m` to `C_d` and `(1 + χ(−1))·χ(m) sin(2πm/x)/m`
//! to `S_d`, so `C_d ≡ 0` for even and `S_d ≡ 0` for odd characters hold
//! structurally instead of through cancellation.
//!
//! `S_d` is built from the sine kernel `sin(2πm/x)`. The cosine kernel
//! `1 − cos(2πm/x)` would make `S_d` a copy of `C_d`, which contradicts the
//! decomposition of `1 − e(−a) = (1 − cos 2πa) + i sin 2πa` it comes from.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::arith::FundamentalDiscriminant;
use crate::char_sums::{char_prefix_sum, target_sum, CharacterTable};
use crate::numeric::pairwise_sum;
use crate::{Error, Result};

/// `τ(χ_d) = Σ_{n=1}^{|d|} χ_d(n) e(n/|d|)` by direct summation.
pub fn gauss_sum(d: FundamentalDiscriminant) -> Complex64 {
    let q = d.modulus();
    let (mut re, mut im) = (Vec::with_capacity(q as usize), Vec::with_capacity(q as usize));
    for n in 1..=q {
        let c = d.chi(n as i64) as f64;
        if c == 0.0 {
            continue;
        }
        let (s, co) = (2.0 * PI * n as f64 / q as f64).sin_cos();
        re.push(c * co);
        im.push(c * s);
    }
    Complex64::new(pairwise_sum(&re), pairwise_sum(&im))
}

/// `z = √(q·x)·log q` for a modulus `q = |d| >= 3`.
pub fn choose_z_for_modulus(modulus: f64, x: f64) -> Result<f64> {
    if !(modulus >= 3.0 && modulus.is_finite()) {
        return Err(Error::invalid("|d|", format!("must be >= 3, got {modulus}")));
    }
    if !(x >= 1.0 && x.is_finite()) {
        return Err(Error::invalid("x", format!("must be finite and >= 1, got {x}")));
    }
    Ok((modulus * x).sqrt() * modulus.ln())
}

/// Truncation height `√(|d|·x)·log|d|`.
pub fn choose_z(d: FundamentalDiscriminant, x: f64) -> Result<f64> {
    choose_z_for_modulus(d.modulus() as f64, x)
}

/// Inputs of one truncated expansion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolyaParams {
    pub d: FundamentalDiscriminant,
    /// Prefix fraction: the exact side sums `n ≤ α|d|`.
    pub alpha: f64,
    /// Truncation height; terms with `|m| ≤ z` are kept.
    pub z: f64,
}

impl PolyaParams {
    pub fn new(d: FundamentalDiscriminant, alpha: f64, z: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::invalid("alpha", format!("must lie in (0, 1), got {alpha}")));
        }
        if !(z >= 1.0 && z.is_finite()) {
            return Err(Error::invalid("z", format!("must be finite and >= 1, got {z}")));
        }
        Ok(PolyaParams { d, alpha, z })
    }

    /// `α = 1/x` with `z = choose_z(d, x)`.
    pub fn from_cut(d: FundamentalDiscriminant, x: f64) -> Result<Self> {
        let z = choose_z(d, x)?;
        PolyaParams::new(d, 1.0 / x, z)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolyaReport {
    pub d: FundamentalDiscriminant,
    pub alpha: f64,
    pub exact: i64,
    pub approx: Complex64,
    pub abs_error: f64,
    /// `1 + |d|·log|d| / z`, the shape of the truncation error with unit constant.
    pub error_budget: f64,
    pub z_used: f64,
}

/// Harmonic count `⌊z⌋` as an index bound.
fn harmonics(z: f64) -> u64 {
    z.floor() as u64
}

/// Evaluate the truncated expansion and compare it with the exact prefix sum.
pub fn polya_truncated(p: &PolyaParams) -> PolyaReport {
    let d = p.d;
    let table = CharacterTable::new(d);
    let tau = gauss_sum(d);
    let m_max = harmonics(p.z);
    let terms: Vec<f64> = (1..=m_max)
        .filter_map(|m| {
            let c = table.chi(m);
            if c == 0 {
                return None;
            }
            let arg = 2.0 * PI * p.alpha * m as f64;
            let kernel = if d.is_even() { arg.sin() } else { 1.0 - arg.cos() };
            Some(c as f64 * kernel / m as f64)
        })
        .collect();
    // Paired sum over ±m: 2i·Σ χ(m) sin/m (even) or 2·Σ χ(m)(1 − cos)/m (odd).
    let paired = 2.0 * pairwise_sum(&terms);
    let inner = if d.is_even() {
        Complex64::new(0.0, paired)
    } else {
        Complex64::new(paired, 0.0)
    };
    let approx = tau / Complex64::new(0.0, 2.0 * PI) * inner;
    let t = (p.alpha * d.modulus() as f64).floor() as u64;
    let exact = char_prefix_sum(d, t);
    let q = d.modulus() as f64;
    PolyaReport {
        d,
        alpha: p.alpha,
        exact,
        approx,
        abs_error: (Complex64::new(exact as f64, 0.0) - approx).norm(),
        error_budget: 1.0 + q * q.ln() / p.z,
        z_used: p.z,
    }
}

/// The weights `a_k = (1 − cos(2πk/x))/k` for `1 ≤ k ≤ ⌊z⌋`.
///
/// `C_d(z) = (1 − χ_d(−1))·Σ_k χ_d(k)·a_k`, so one table serves every
/// discriminant sharing `z` and `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct CutWeights {
    z: f64,
    x: f64,
    weights: Vec<f64>,
}

impl CutWeights {
    pub fn new(z: f64, x: f64) -> Result<Self> {
        check_zx(z, x)?;
        let weights = (1..=harmonics(z))
            .map(|k| (1.0 - (2.0 * PI * k as f64 / x).cos()) / k as f64)
            .collect();
        Ok(CutWeights { z, x, weights })
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    /// `a_k` for `k ≥ 1`; zero beyond the truncation.
    pub fn weight(&self, k: u64) -> f64 {
        match k {
            0 => 0.0,
            k => self.weights.get(k as usize - 1).copied().unwrap_or(0.0),
        }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// `C_d(z)` using the period table of `χ_d`.
    pub fn cosine_sum(&self, table: &CharacterTable) -> f64 {
        if table.discriminant().is_even() {
            return 0.0;
        }
        let terms: Vec<f64> = self
            .weights
            .iter()
            .enumerate()
            .map(|(i, &a)| table.chi(i as u64 + 1) as f64 * a)
            .collect();
        2.0 * pairwise_sum(&terms)
    }
}

fn check_zx(z: f64, x: f64) -> Result<()> {
    if !(z >= 1.0 && z.is_finite()) {
        return Err(Error::invalid("z", format!("must be finite and >= 1, got {z}")));
    }
    if !(x >= 1.0 && x.is_finite()) {
        return Err(Error::invalid("x", format!("must be finite and >= 1, got {x}")));
    }
    Ok(())
}

fn paired_sum(d: FundamentalDiscriminant, z: f64, kernel: impl Fn(u64) -> f64) -> f64 {
    let terms: Vec<f64> = (1..=harmonics(z))
        .map(|m| d.chi(m as i64) as f64 * kernel(m) / m as f64)
        .collect();
    2.0 * pairwise_sum(&terms)
}

/// `C_d(z) = Σ_{1≤|m|≤z} χ_d(m)/m · (1 − cos(2πm/x))`; identically zero for `d > 0`.
pub fn cosine_sum(d: FundamentalDiscriminant, z: f64, x: f64) -> Result<f64> {
    check_zx(z, x)?;
    if d.is_even() {
        return Ok(0.0);
    }
    Ok(paired_sum(d, z, |m| 1.0 - (2.0 * PI * m as f64 / x).cos()))
}

/// `S_d(z) = Σ_{1≤|m|≤z} χ_d(m)/m · sin(2πm/x)`; identically zero for `d < 0`.
pub fn sine_sum(d: FundamentalDiscriminant, z: f64, x: f64) -> Result<f64> {
    check_zx(z, x)?;
    if !d.is_even() {
        return Ok(0.0);
    }
    Ok(paired_sum(d, z, |m| (2.0 * PI * m as f64 / x).sin()))
}

/// `(√|d|/2π)·|C_d(z)|` against the exact target sum, for odd characters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Reconstruction {
    pub d: FundamentalDiscriminant,
    pub x: f64,
    pub z: f64,
    pub bound: f64,
    pub exact: i64,
    /// `|exact| − bound`; expected to stay `O(√(|d|/x))`.
    pub residual: f64,
}

/// Approximate `|Σ_{n≤|d|/x} χ_d(n)|` by `(√|d|/2π)·|C_d(z)|` with `z = choose_z(d, x)`.
pub fn reconstruct_bound(d: FundamentalDiscriminant, x: f64) -> Result<Reconstruction> {
    if d.is_even() {
        return Err(Error::invalid(
            "d",
            format!("{d} > 0 gives an even character; the sine part carries the sum"),
        ));
    }
    let z = choose_z(d, x)?;
    let c = cosine_sum(d, z, x)?;
    let bound = (d.modulus() as f64).sqrt() / (2.0 * PI) * c.abs();
    let exact = target_sum(d, x)?;
    Ok(Reconstruction {
        d,
        x,
        z,
        bound,
        exact,
        residual: exact.abs() as f64 - bound,
    })
}
