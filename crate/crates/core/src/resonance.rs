//! Resonance method for `max_{X<|d|≤2X} C_d(z)²`.
//!
//! A resonator `R(d) = Σ_{n≤y} r(n) χ_d(n)` with nonnegative multiplicative
//! `r` supported on squarefree integers built from the primes of a window
//! `[λ², exp((log λ)²)]`, `r(p) = λ / (√p · log p)`, weights each discriminant.
//! Since
//!
//! ```text
//! M₂/M₁ = Σ R(d)² C_d(z)² / Σ R(d)²
//! ```
//!
//! is a weighted mean of `C_d(z)²`, it never exceeds the maximum. This module
//! computes both moments exactly by enumeration, their square-class main
//! terms, and the normalised quadruple sum whose growth drives the bound.
//!
//! At desk scale the default parameter rule `λ = √(log y · log log y)` leaves
//! the prime window empty (it needs `λ ≥ e²`, i.e. `y` around `2·10⁷` or more),
//! so the resonator collapses to `R ≡ 1`. [`ResonatorOverrides`] substitutes an
//! explicit window and `λ` to exercise the machinery with nontrivial support.

use std::f64::consts::E;

use rayon::prelude::*;

use crate::arith::{factorize, fundamental_in_abs_window, primes_up_to, FundamentalDiscriminant};
use crate::char_sums::CharacterTable;
use crate::numeric::{log2_iter, pairwise_sum, ZETA2};
use crate::polya::{choose_z_for_modulus, CutWeights};
use crate::{Error, Result};

/// Largest prime window the builder will enumerate.
pub const MAX_WINDOW_PRIME: f64 = 1e8;

/// Explicit replacements for the default `λ` and prime window.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ResonatorOverrides {
    pub lambda: Option<f64>,
    /// Inclusive prime window `[lo, hi]`.
    pub window: Option<(f64, f64)>,
}

impl ResonatorOverrides {
    pub fn is_none(&self) -> bool {
        self.lambda.is_none() && self.window.is_none()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResonatorSpec {
    y: f64,
    lambda: f64,
    window_lo: f64,
    window_hi: f64,
    delta: f64,
    window_empty: bool,
    prime_weights: Vec<(u64, f64)>,
    coefficients: Vec<(u64, f64)>,
}

/// `λ = √(log y · log log y)`, or 0 when `y ≤ e` and the expression is not positive.
pub fn default_lambda(y: f64) -> f64 {
    if y <= E {
        return 0.0;
    }
    (y.ln() * log2_iter(y)).sqrt()
}

/// Build the resonator for support `n ≤ y`.
///
/// `delta` is only validated (and recorded) when no overrides are given; it
/// enters through [`default_support`] rather than through the coefficients.
pub fn build_resonator(y: f64, delta: f64, overrides: ResonatorOverrides) -> Result<ResonatorSpec> {
    if !(y >= 1.0 && y.is_finite()) {
        return Err(Error::invalid("y", format!("must be finite and >= 1, got {y}")));
    }
    if overrides.is_none() && !(delta > 0.0 && delta < 0.25) {
        return Err(Error::invalid("delta", format!("must lie in (0, 1/4), got {delta}")));
    }
    let lambda = overrides.lambda.unwrap_or_else(|| default_lambda(y));
    if !(lambda >= 0.0 && lambda.is_finite()) {
        return Err(Error::invalid("lambda", format!("must be finite and >= 0, got {lambda}")));
    }
    let (window_lo, window_hi) = match overrides.window {
        Some(w) => w,
        None if lambda > 0.0 => (lambda * lambda, lambda.ln().powi(2).exp()),
        None => (0.0, 0.0),
    };
    if window_lo.is_nan() || window_hi.is_nan() {
        return Err(Error::invalid("window", "bounds must be numbers"));
    }
    let primes: Vec<u64> = if window_lo > window_hi || window_hi < 2.0 {
        Vec::new()
    } else {
        if window_hi > MAX_WINDOW_PRIME {
            return Err(Error::invalid(
                "window",
                format!("upper end {window_hi} exceeds {MAX_WINDOW_PRIME}"),
            ));
        }
        primes_up_to(window_hi.floor() as u64)
            .iter()
            .copied()
            .filter(|&p| p as f64 >= window_lo)
            .collect()
    };
    let prime_weights: Vec<(u64, f64)> = primes
        .iter()
        .map(|&p| (p, lambda / ((p as f64).sqrt() * (p as f64).ln())))
        .collect();
    let coefficients = squarefree_products(&prime_weights, y);
    Ok(ResonatorSpec {
        y,
        lambda,
        window_lo,
        window_hi,
        delta,
        window_empty: prime_weights.is_empty(),
        prime_weights,
        coefficients,
    })
}

/// Every squarefree product `n ≤ limit` of the given primes with `Π r(p)`, ascending in `n`.
fn squarefree_products(prime_weights: &[(u64, f64)], limit: f64) -> Vec<(u64, f64)> {
    fn walk(primes: &[(u64, f64)], start: usize, n: u64, r: f64, limit: f64, out: &mut Vec<(u64, f64)>) {
        out.push((n, r));
        for i in start..primes.len() {
            let (p, rp) = primes[i];
            let next = n as f64 * p as f64;
            if next > limit {
                break;
            }
            walk(primes, i + 1, n * p, r * rp, limit, out);
        }
    }
    let mut out = Vec::new();
    if limit >= 1.0 {
        walk(prime_weights, 0, 1, 1.0, limit, &mut out);
    }
    out.sort_by_key(|&(n, _)| n);
    out
}

impl ResonatorSpec {
    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// `(window_lo, window_hi)`.
    pub fn window(&self) -> (f64, f64) {
        (self.window_lo, self.window_hi)
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// No prime lies in the window, so `r` is supported on `{1}` and `R ≡ 1`.
    pub fn window_empty(&self) -> bool {
        self.window_empty
    }

    /// Window primes with `r(p)`.
    pub fn prime_weights(&self) -> &[(u64, f64)] {
        &self.prime_weights
    }

    /// `(n, r(n))` for every `n ≤ y` in the support, ascending.
    pub fn coefficients(&self) -> &[(u64, f64)] {
        &self.coefficients
    }

    /// `(n, r(n))` for every support element `n ≤ limit`, independent of `y`.
    pub fn support_up_to(&self, limit: f64) -> Vec<(u64, f64)> {
        squarefree_products(&self.prime_weights, limit)
    }

    /// `r(n)` for any `n ≥ 1`.
    pub fn r(&self, n: u64) -> f64 {
        if n == 0 {
            return 0.0;
        }
        let mut acc = 1.0;
        for (p, e) in factorize(n) {
            if e > 1 {
                return 0.0;
            }
            match self.prime_weights.binary_search_by_key(&p, |&(q, _)| q) {
                Ok(i) => acc *= self.prime_weights[i].1,
                Err(_) => return 0.0,
            }
        }
        acc
    }

    /// `Π_p (1 + r(p)²)` over the window primes.
    pub fn euler_product(&self) -> f64 {
        self.prime_weights.iter().map(|&(_, r)| 1.0 + r * r).product()
    }

    /// `Σ_n r(n)`, which bounds `|R(d)|`.
    pub fn l1_norm(&self) -> f64 {
        pairwise_sum(&self.coefficients.iter().map(|&(_, r)| r).collect::<Vec<_>>())
    }

    fn value_with(&self, table: &CharacterTable) -> f64 {
        let terms: Vec<f64> = self
            .coefficients
            .iter()
            .map(|&(n, r)| r * table.chi(n) as f64)
            .collect();
        pairwise_sum(&terms)
    }
}

/// Support length `y = X^{1/2−δ} / (2 log z)²` with `z = choose_z(2X, x)`,
/// clamped below at 1 so that `n = 1` always belongs to the resonator.
pub fn default_support(scale: u64, x: f64, delta: f64) -> Result<f64> {
    if !(delta > 0.0 && delta < 0.25) {
        return Err(Error::invalid("delta", format!("must lie in (0, 1/4), got {delta}")));
    }
    let z = choose_z_for_modulus(2.0 * scale as f64, x)?;
    let y = (scale as f64).powf(0.5 - delta) / (2.0 * z.ln()).powi(2);
    Ok(y.max(1.0))
}

/// Resonator from the default parameter rule for the window `X < |d| ≤ 2X`.
pub fn default_resonator(scale: u64, x: f64, delta: f64) -> Result<ResonatorSpec> {
    build_resonator(default_support(scale, x, delta)?, delta, ResonatorOverrides::default())
}

/// `R(d) = Σ_{n≤y} r(n) χ_d(n)`.
pub fn resonator_value(spec: &ResonatorSpec, d: FundamentalDiscriminant) -> f64 {
    let terms: Vec<f64> = spec
        .coefficients
        .iter()
        .map(|&(n, r)| r * d.chi(n as i64) as f64)
        .collect();
    pairwise_sum(&terms)
}

/// Discriminants with `lo < |d| ≤ hi`; the dyadic window is `(X, 2X]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiscriminantWindow {
    lo_exclusive: u64,
    hi: u64,
}

impl DiscriminantWindow {
    pub fn dyadic(scale: u64) -> Result<Self> {
        if scale < 1 {
            return Err(Error::invalid("X", "must be >= 1"));
        }
        Ok(DiscriminantWindow {
            lo_exclusive: scale,
            hi: 2 * scale,
        })
    }

    pub fn new(lo_exclusive: u64, hi: u64) -> Result<Self> {
        if hi <= lo_exclusive {
            return Err(Error::invalid("window", format!("empty range ({lo_exclusive}, {hi}]")));
        }
        Ok(DiscriminantWindow { lo_exclusive, hi })
    }

    pub fn lo_exclusive(&self) -> u64 {
        self.lo_exclusive
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }

    /// `hi − lo`, the length entering the main terms.
    pub fn length(&self) -> f64 {
        (self.hi - self.lo_exclusive) as f64
    }

    pub fn discriminants(&self) -> Result<Vec<FundamentalDiscriminant>> {
        let ds = fundamental_in_abs_window(self.lo_exclusive, self.hi);
        if ds.is_empty() {
            return Err(Error::EmptyWindow {
                lo: self.lo_exclusive,
                hi: self.hi,
            });
        }
        Ok(ds)
    }
}

/// How the truncation height enters `C_d(z)` inside `M₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ZRule {
    /// One `z = choose_z(hi, x)` for the whole window; dominates every per-`d` height.
    #[default]
    FixedAtUpper,
    /// `z = choose_z(|d|, x)` for each discriminant.
    PerDiscriminant,
}

impl ZRule {
    pub fn label(self) -> &'static str {
        match self {
            ZRule::FixedAtUpper => "fixed_upper",
            ZRule::PerDiscriminant => "per_d",
        }
    }
}

/// `∏_{p | n} p/(p+1)`.
pub fn local_factor(n: u64) -> f64 {
    factorize(n)
        .into_iter()
        .map(|(p, _)| p as f64 / (p as f64 + 1.0))
        .product()
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `∏_{p|n} p/(p+1)` for `0 ≤ n ≤ limit` by a smallest-prime-factor sieve.
fn local_factor_table(limit: u64) -> Vec<f64> {
    let len = limit as usize + 1;
    let mut table = vec![1.0; len];
    let mut seen = vec![false; len];
    for p in 2..len {
        if seen[p] {
            continue;
        }
        let f = p as f64 / (p as f64 + 1.0);
        let mut k = p;
        while k < len {
            seen[k] = true;
            table[k] *= f;
            k += p;
        }
    }
    table
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Moment1 {
    /// `Σ_{d} R(d)²` by enumeration.
    pub exact: f64,
    /// `(L/ζ(2))·Σ_m r(m)² ∏_{p|m} p/(p+1)`, `L` the window length.
    pub main: f64,
    /// `(L/ζ(2))·Σ_m r(m)²`, dropping the local factors.
    pub main_unweighted: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Moment2 {
    /// `Σ_{d} R(d)² C_d(z)²` by enumeration.
    pub exact: f64,
    /// Diagonal `mk = nℓ` part of the main term.
    pub main: f64,
    /// Full square-class main term over `kℓmn = □`.
    pub main_full: f64,
    pub z: f64,
}

/// `M₁` main terms from the diagonal `m = n` (for squarefree `m, n`, `mn = □` forces it).
pub fn moment1_main(spec: &ResonatorSpec, window: &DiscriminantWindow) -> (f64, f64) {
    let scale = window.length() / ZETA2;
    let weighted: Vec<f64> = spec
        .coefficients
        .iter()
        .map(|&(m, r)| r * r * local_factor(m))
        .collect();
    let plain: Vec<f64> = spec.coefficients.iter().map(|&(_, r)| r * r).collect();
    (scale * pairwise_sum(&weighted), scale * pairwise_sum(&plain))
}

/// Diagonal main term of `M₂` through `k = n₁g`, `ℓ = m₁g` with
/// `m₁ = m/(m,n)`, `n₁ = n/(m,n)`:
///
/// ```text
/// (2L/ζ(2)) Σ_{m,n} r(m) r(n) Σ_{g ≤ z/max(m₁,n₁)} a_{n₁g} a_{m₁g} ∏_{p|mng} p/(p+1)
/// ```
///
/// The factor 2 collects the pairs with `k, ℓ < 0`.
pub fn moment2_main_diagonal(spec: &ResonatorSpec, window: &DiscriminantWindow, weights: &CutWeights) -> f64 {
    let kmax = weights.len() as u64;
    let h = local_factor_table(kmax);
    let support = spec.coefficients();
    let mut terms = Vec::new();
    for &(m, rm) in support {
        for &(n, rn) in support {
            let g0 = gcd(m, n);
            let (m1, n1) = (m / g0, n / g0);
            let lcm = m / g0 * n;
            let h_lcm = local_factor(lcm);
            let gmax = kmax / m1.max(n1);
            let inner: Vec<f64> = (1..=gmax)
                .map(|g| {
                    let shared = gcd(lcm, g);
                    let h_mng = h_lcm * h[g as usize] / h[shared as usize];
                    weights.weight(n1 * g) * weights.weight(m1 * g) * h_mng
                })
                .collect();
            terms.push(rm * rn * pairwise_sum(&inner));
        }
    }
    2.0 * window.length() / ZETA2 * pairwise_sum(&terms)
}

/// Full main term of `M₂`:
///
/// ```text
/// (2L/ζ(2)) Σ_{k,ℓ≤z} a_k a_ℓ Σ_{m,n : kℓmn=□} r(m) r(n) ∏_{p|kℓmn} p/(p+1)
/// ```
///
/// `kℓmn` is a square iff the squarefree kernels of `km` and `ℓn` agree, so
/// pairs are bucketed by that kernel.
pub fn moment2_main_full(spec: &ResonatorSpec, window: &DiscriminantWindow, weights: &CutWeights) -> f64 {
    let kmax = weights.len() as u64;
    let h = local_factor_table(kmax);
    let mut kernel_of = vec![1u64; kmax as usize + 1];
    let mut radical_of = vec![1u64; kmax as usize + 1];
    for k in 1..=kmax {
        let (mut s, mut rad) = (1u64, 1u64);
        for (p, e) in factorize(k) {
            rad *= p;
            if e % 2 == 1 {
                s *= p;
            }
        }
        kernel_of[k as usize] = s;
        radical_of[k as usize] = rad;
    }
    // (kernel, weight, radical, local factor of the radical)
    let mut items: Vec<(u64, f64, u64, f64)> = Vec::new();
    for &(m, rm) in spec.coefficients() {
        for k in 1..=kmax {
            let a = weights.weight(k);
            if a == 0.0 {
                continue;
            }
            let s = kernel_of[k as usize];
            let g = gcd(s, m);
            let kernel = s / g * (m / g);
            let rk = radical_of[k as usize];
            let rad = rk / gcd(rk, m) * m;
            let hk = h[k as usize] * local_factor(m) / local_factor(gcd(rk, m));
            items.push((kernel, a * rm, rad, hk));
        }
    }
    items.sort_by(|a, b| a.0.cmp(&b.0).then(a.2.cmp(&b.2)).then(a.1.total_cmp(&b.1)));
    let mut group_sums = Vec::new();
    let mut start = 0;
    while start < items.len() {
        let key = items[start].0;
        let end = start + items[start..].partition_point(|it| it.0 == key);
        let group = &items[start..end];
        let mut terms = Vec::with_capacity(group.len() * group.len());
        for &(_, wi, ri, hi) in group {
            for &(_, wj, rj, hj) in group {
                let shared = gcd(ri, rj);
                terms.push(wi * wj * hi * hj / local_factor(shared));
            }
        }
        group_sums.push(pairwise_sum(&terms));
        start = end;
    }
    2.0 * window.length() / ZETA2 * pairwise_sum(&group_sums)
}

/// Per-discriminant `(R(d), C_d(z))` in ascending `d`.
fn evaluate_window(
    spec: &ResonatorSpec,
    ds: &[FundamentalDiscriminant],
    x: f64,
    z_rule: ZRule,
    fixed: &CutWeights,
) -> Result<Vec<(f64, f64)>> {
    ds.par_iter()
        .map(|&d| {
            let table = CharacterTable::new(d);
            let r = spec.value_with(&table);
            let c = match z_rule {
                ZRule::FixedAtUpper => fixed.cosine_sum(&table),
                ZRule::PerDiscriminant => {
                    if d.is_even() {
                        0.0
                    } else {
                        let z = choose_z_for_modulus(d.modulus() as f64, x)?;
                        CutWeights::new(z, x)?.cosine_sum(&table)
                    }
                }
            };
            Ok((r, c))
        })
        .collect()
}

fn upper_weights(window: &DiscriminantWindow, x: f64) -> Result<CutWeights> {
    let z = choose_z_for_modulus(window.hi() as f64, x)?;
    CutWeights::new(z, x)
}

/// `M₁(R, X) = Σ_{X<|d|≤2X} R(d)²` with its main terms.
pub fn moment1(spec: &ResonatorSpec, window: &DiscriminantWindow) -> Result<Moment1> {
    let ds = window.discriminants()?;
    let values: Vec<f64> = ds
        .par_iter()
        .map(|&d| {
            let r = spec.value_with(&CharacterTable::new(d));
            r * r
        })
        .collect();
    let (main, main_unweighted) = moment1_main(spec, window);
    Ok(Moment1 {
        exact: pairwise_sum(&values),
        main,
        main_unweighted,
    })
}

/// `M₂(R, X) = Σ_{X<|d|≤2X} R(d)² C_d(z)²` with its main terms.
pub fn moment2(spec: &ResonatorSpec, window: &DiscriminantWindow, x: f64, z_rule: ZRule) -> Result<Moment2> {
    let ds = window.discriminants()?;
    let weights = upper_weights(window, x)?;
    let values = evaluate_window(spec, &ds, x, z_rule, &weights)?;
    let terms: Vec<f64> = values.iter().map(|&(r, c)| r * r * c * c).collect();
    Ok(Moment2 {
        exact: pairwise_sum(&terms),
        main: moment2_main_diagonal(spec, window, &weights),
        main_full: moment2_main_full(spec, window, &weights),
        z: weights.z(),
    })
}

/// Both moments, their ratio and the independently computed maximum of `C_d(z)²`.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentReport {
    /// Lower end `X` of the window.
    pub scale: u64,
    pub x: f64,
    pub m1_exact: f64,
    pub m1_main: f64,
    pub m2_exact: f64,
    pub m2_main: f64,
    pub ratio: f64,
    pub max_cd_sq: f64,
    pub z_rule: ZRule,
    pub z: f64,
}

/// Weighted-mean bound `max C_d(z)² ≥ M₂/M₁`.
pub fn ratio_bound(spec: &ResonatorSpec, window: &DiscriminantWindow, x: f64, z_rule: ZRule) -> Result<MomentReport> {
    let ds = window.discriminants()?;
    let weights = upper_weights(window, x)?;
    let values = evaluate_window(spec, &ds, x, z_rule, &weights)?;
    let m1_terms: Vec<f64> = values.iter().map(|&(r, _)| r * r).collect();
    let m2_terms: Vec<f64> = values.iter().map(|&(r, c)| r * r * c * c).collect();
    let m1_exact = pairwise_sum(&m1_terms);
    let m2_exact = pairwise_sum(&m2_terms);
    if m1_exact == 0.0 {
        return Err(Error::DegenerateResonator);
    }
    let max_cd_sq = values.iter().map(|&(_, c)| c * c).fold(0.0, f64::max);
    // Normalised weights make a one-point window reproduce C_d(z)² exactly.
    let mean_terms: Vec<f64> = values.iter().map(|&(r, c)| r * r / m1_exact * (c * c)).collect();
    let (m1_main, _) = moment1_main(spec, window);
    Ok(MomentReport {
        scale: window.lo_exclusive(),
        x,
        m1_exact,
        m1_main,
        m2_exact,
        m2_main: moment2_main_diagonal(spec, window, &weights),
        ratio: pairwise_sum(&mean_terms),
        max_cd_sq,
        z_rule,
        z: weights.z(),
    })
}

/// Normalised quadruple sum and its asymptotic comparison value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RmrnReport {
    pub y_cap: f64,
    pub w_cap: f64,
    pub lhs: f64,
    /// `exp(2·√(log Y / log log Y))`, the asymptotic growth rate only.
    pub rhs: f64,
    pub window_empty: bool,
}

/// ```text
/// Σ_{m₁,n₁≤W, (m₁,n₁)=1} m₁n₁ r(m₁) r(n₁) / max(m₁,n₁)³
///     · Σ_{d ≤ Y/max(m₁,n₁), (d, m₁n₁)=1} r(d)²  /  ∏_p (1 + r(p)²)
/// ```
pub fn rmrn_lhs(spec: &ResonatorSpec, y_cap: f64, w_cap: f64) -> Result<RmrnReport> {
    if !(y_cap >= 3.0 && y_cap.is_finite()) {
        return Err(Error::invalid("Y", format!("must be finite and >= 3, got {y_cap}")));
    }
    if w_cap.is_nan() || w_cap < 1.0 {
        return Err(Error::invalid("W", format!("must be >= 1, got {w_cap}")));
    }
    if w_cap > y_cap {
        return Err(Error::invalid("W", format!("{w_cap} exceeds Y = {y_cap}")));
    }
    let support = spec.support_up_to(y_cap);
    let small: Vec<(u64, f64)> = support.iter().copied().filter(|&(n, _)| n as f64 <= w_cap).collect();
    let mut terms = Vec::new();
    for &(m1, r1) in &small {
        for &(n1, r2) in &small {
            if gcd(m1, n1) != 1 {
                continue;
            }
            let mx = m1.max(n1) as f64;
            let inner: Vec<f64> = support
                .iter()
                .take_while(|&&(d, _)| d as f64 * mx <= y_cap)
                .filter(|&&(d, _)| gcd(d, m1 * n1) == 1)
                .map(|&(_, r)| r * r)
                .collect();
            terms.push(m1 as f64 * n1 as f64 * r1 * r2 / (mx * mx * mx) * pairwise_sum(&inner));
        }
    }
    Ok(RmrnReport {
        y_cap,
        w_cap,
        lhs: pairwise_sum(&terms) / spec.euler_product(),
        rhs: (2.0 * (y_cap.ln() / log2_iter(y_cap)).sqrt()).exp(),
        window_empty: spec.window_empty(),
    })
}

/// `√(X/x)·exp((√2/2)·√(log X / log log X))`, the large-value prediction with
/// its `o(1)` dropped. A reference line, not a bound at finite `X`.
pub fn predicted_lower_bound(scale: f64, x: f64) -> Result<f64> {
    if !(scale > E && scale.is_finite()) {
        return Err(Error::invalid("X", format!("must exceed e, got {scale}")));
    }
    if !(x >= 1.0 && x.is_finite()) {
        return Err(Error::invalid("x", format!("must be finite and >= 1, got {x}")));
    }
    let growth = (0.5f64).sqrt() * (scale.ln() / log2_iter(scale)).sqrt();
    Ok((scale / x).sqrt() * growth.exp())
}
