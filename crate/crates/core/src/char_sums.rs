//! Exact prefix sums `Σ_{n≤t} χ_d(n)` and the extremal search over the
//! dyadic window `X < |d| ≤ 2X`.

use rayon::prelude::*;

use crate::arith::{fundamental_in_abs_window, FundamentalDiscriminant};
use crate::resonance::predicted_lower_bound;
use crate::{Error, Result};

/// One period of `χ_d` with its running sums, for discriminants queried many times.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    d: FundamentalDiscriminant,
    values: Vec<i8>,
    prefix: Vec<i64>,
}

impl CharacterTable {
    pub fn new(d: FundamentalDiscriminant) -> Self {
        let q = d.modulus() as usize;
        let values: Vec<i8> = (0..q as i64).map(|n| d.chi(n)).collect();
        let mut prefix = Vec::with_capacity(q);
        let mut acc = 0i64;
        prefix.push(0);
        for &v in &values[1..] {
            acc += v as i64;
            prefix.push(acc);
        }
        CharacterTable { d, values, prefix }
    }

    pub fn discriminant(&self) -> FundamentalDiscriminant {
        self.d
    }

    /// `χ_d(n)` for `n >= 0`.
    #[inline]
    pub fn chi(&self, n: u64) -> i8 {
        self.values[(n % self.values.len() as u64) as usize]
    }

    /// `Σ_{1≤n≤t} χ_d(n)`; whole periods contribute zero.
    pub fn prefix_sum(&self, t: u64) -> i64 {
        self.prefix[(t % self.values.len() as u64) as usize]
    }
}

/// `Σ_{1≤n≤t} χ_d(n)` by direct summation over `t mod |d|` terms.
pub fn char_prefix_sum(d: FundamentalDiscriminant, t: u64) -> i64 {
    let r = t % d.modulus();
    (1..=r as i64).map(|n| d.chi(n) as i64).sum()
}

/// `⌊|d|/x⌋`, the prefix length used by the target sum.
pub fn prefix_length(d: FundamentalDiscriminant, x: f64) -> Result<u64> {
    check_cut(x)?;
    Ok((d.modulus() as f64 / x).floor() as u64)
}

fn check_cut(x: f64) -> Result<()> {
    if !(x.is_finite() && x >= 1.0) {
        return Err(Error::invalid("x", format!("cut parameter must be finite and >= 1, got {x}")));
    }
    Ok(())
}

/// `Σ_{n ≤ |d|/x} χ_d(n)`.
pub fn target_sum(d: FundamentalDiscriminant, x: f64) -> Result<i64> {
    Ok(char_prefix_sum(d, prefix_length(d, x)?))
}

/// Which maximum the search reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MaxMode {
    /// Largest signed value of the sum.
    #[default]
    Signed,
    /// Largest absolute value.
    Absolute,
}

/// Dyadic window `X < |d| ≤ 2X` with cut parameter `x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchWindow {
    scale: u64,
    cut: f64,
}

impl SearchWindow {
    pub fn new(scale: u64, cut: f64) -> Result<Self> {
        if scale < 3 {
            return Err(Error::invalid("X", format!("window base must be >= 3, got {scale}")));
        }
        check_cut(cut)?;
        Ok(SearchWindow { scale, cut })
    }

    /// `X`.
    pub fn scale(&self) -> u64 {
        self.scale
    }

    /// `x`.
    pub fn cut(&self) -> f64 {
        self.cut
    }

    pub fn discriminants(&self) -> Vec<FundamentalDiscriminant> {
        fundamental_in_abs_window(self.scale, 2 * self.scale)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult {
    pub scale: u64,
    pub cut: f64,
    pub d_star: FundamentalDiscriminant,
    pub value: i64,
    /// `value / √(X/x)`.
    pub normalized: f64,
    /// Closed-form reference line `√(X/x)·exp((√2/2)·√(log X / log log X))`.
    pub predicted: f64,
}

/// Prefer the higher score; ties go to smaller `|d|`, then to negative `d`.
fn better(
    a: (FundamentalDiscriminant, i64),
    b: (FundamentalDiscriminant, i64),
    mode: MaxMode,
) -> (FundamentalDiscriminant, i64) {
    let score = |v: i64| match mode {
        MaxMode::Signed => v,
        MaxMode::Absolute => v.abs(),
    };
    let key = |(d, v): (FundamentalDiscriminant, i64)| {
        (score(v), std::cmp::Reverse(d.modulus()), std::cmp::Reverse(d.get() > 0))
    };
    if key(b) > key(a) {
        b
    } else {
        a
    }
}

/// Argmax of the target sum over an explicit list of discriminants.
pub fn search_max_over(
    discriminants: &[FundamentalDiscriminant],
    cut: f64,
    mode: MaxMode,
) -> Result<Option<(FundamentalDiscriminant, i64)>> {
    check_cut(cut)?;
    Ok(discriminants
        .par_iter()
        .map(|&d| {
            let t = prefix_length(d, cut).expect("cut checked");
            (d, char_prefix_sum(d, t))
        })
        .reduce_with(|a, b| better(a, b, mode)))
}

/// `max_{X<|d|≤2X, d∈F} Σ_{n≤|d|/x} χ_d(n)` together with its maximiser.
pub fn search_max(window: &SearchWindow, mode: MaxMode) -> Result<SearchResult> {
    let ds = window.discriminants();
    let (d_star, value) = search_max_over(&ds, window.cut, mode)?.ok_or(Error::EmptyWindow {
        lo: window.scale,
        hi: 2 * window.scale,
    })?;
    let scale = window.scale as f64;
    Ok(SearchResult {
        scale: window.scale,
        cut: window.cut,
        d_star,
        value,
        normalized: value as f64 / (scale / window.cut).sqrt(),
        predicted: predicted_lower_bound(scale, window.cut)?,
    })
}
