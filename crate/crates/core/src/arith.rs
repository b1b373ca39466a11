//! Exact integer arithmetic: Kronecker symbols, fundamental discriminants,
//! squarefree structure and small prime tables.
//!
//! Every quantity here fits in a machine word at the scales this crate
//! targets, so there is no arbitrary-precision arithmetic.

use std::borrow::Cow;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::{Error, Result};

/// Window lengths above this use the segmented squarefree sieve instead of
/// per-element trial division.
const SIEVE_THRESHOLD: u64 = 10_000;

/// Segment length of the sieve; also the unit of parallel work.
pub const SEGMENT_LEN: u64 = 1_000_000;

/// Limit of the process-wide prime table. Trial division against it settles
/// every `n < 2^32`; larger inputs fall back to odd candidates.
const SHARED_TABLE_LIMIT: u64 = 1 << 16;

/// All primes up to `limit`, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeTable {
    /// Sieve of Eratosthenes up to and including `limit`.
    pub fn new(limit: u64) -> Self {
        let len = usize::try_from(limit).expect("prime table limit exceeds usize") + 1;
        let mut composite = vec![false; len.max(2)];
        let mut primes = Vec::new();
        for i in 2..len {
            if composite[i] {
                continue;
            }
            primes.push(i as u64);
            let mut j = i.saturating_mul(i);
            while j < len {
                composite[j] = true;
                j += i;
            }
        }
        PrimeTable { limit, primes }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Primes `p` with `lo <= p <= hi`.
    pub fn primes_between(&self, lo: u64, hi: u64) -> &[u64] {
        let start = self.primes.partition_point(|&p| p < lo);
        let end = self.primes.partition_point(|&p| p <= hi);
        &self.primes[start..end.max(start)]
    }

    pub fn is_prime(&self, n: u64) -> bool {
        debug_assert!(n <= self.limit);
        self.primes.binary_search(&n).is_ok()
    }
}

fn shared_table() -> &'static PrimeTable {
    static TABLE: OnceLock<PrimeTable> = OnceLock::new();
    TABLE.get_or_init(|| PrimeTable::new(SHARED_TABLE_LIMIT))
}

/// Primes up to `limit`, borrowed from the shared table when it is large enough.
pub fn primes_up_to(limit: u64) -> Cow<'static, [u64]> {
    let shared = shared_table();
    if limit <= shared.limit() {
        let end = shared.primes.partition_point(|&p| p <= limit);
        Cow::Borrowed(&shared.primes[..end])
    } else {
        Cow::Owned(PrimeTable::new(limit).primes)
    }
}

/// Floor of the square root.
pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r.saturating_mul(r) > n {
        r -= 1;
    }
    while (r + 1).saturating_mul(r + 1) <= n {
        r += 1;
    }
    r
}

/// Prime factorisation of `n >= 1` as ascending `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut push = |n: &mut u64, p: u64| {
        let mut e = 0;
        while n.is_multiple_of(p) {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    let table = shared_table();
    for &p in table.primes() {
        if p * p > n {
            break;
        }
        push(&mut n, p);
    }
    let mut p = (table.limit() + 1) | 1;
    while p.saturating_mul(p) <= n {
        push(&mut n, p);
        p += 2;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Jacobi symbol `(a / n)` for odd `n >= 1`.
fn jacobi(mut a: u64, mut n: u64) -> i8 {
    debug_assert!(n % 2 == 1);
    a %= n;
    let mut t = 1i8;
    while a != 0 {
        let tz = a.trailing_zeros();
        a >>= tz;
        if tz % 2 == 1 && matches!(n % 8, 3 | 5) {
            t = -t;
        }
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        std::mem::swap(&mut a, &mut n);
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

/// Kronecker symbol `(d / n)`, total over all integer pairs.
///
/// Conventions: `(d/0) = 1` iff `|d| = 1`; `(d/-1) = sign(d)`;
/// `(d/2) = 0` for even `d`, `+1` for `d ≡ ±1 (mod 8)`, `-1` for `d ≡ ±3 (mod 8)`.
/// For a fundamental discriminant `d` this is the real primitive character `χ_d`.
pub fn kronecker(d: i64, n: i64) -> i8 {
    if n == 0 {
        return if d == 1 || d == -1 { 1 } else { 0 };
    }
    let mut sign = 1i8;
    if n < 0 && d < 0 {
        sign = -1;
    }
    let mut m = n.unsigned_abs();
    let tz = m.trailing_zeros();
    if tz > 0 {
        if d % 2 == 0 {
            return 0;
        }
        m >>= tz;
        if tz % 2 == 1 && matches!(d.rem_euclid(8), 3 | 5) {
            sign = -sign;
        }
    }
    if m == 1 {
        return sign;
    }
    let a = (d as i128).rem_euclid(m as i128) as u64;
    sign * jacobi(a, m)
}

/// True iff `n >= 1` has no square factor > 1.
pub fn is_squarefree(n: u64) -> bool {
    n != 0 && factorize(n).iter().all(|&(_, e)| e == 1)
}

fn classify(d: i64, squarefree: impl Fn(u64) -> bool) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => squarefree(d.unsigned_abs()),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && squarefree(m.unsigned_abs())
        }
        _ => false,
    }
}

/// True iff `d` is a fundamental discriminant other than 1.
pub fn is_fundamental(d: i64) -> bool {
    classify(d, is_squarefree)
}

/// A validated fundamental discriminant `d ≠ 1`, the conductor-`|d|` label
/// of the real primitive character `χ_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FundamentalDiscriminant(i64);

impl FundamentalDiscriminant {
    pub fn new(d: i64) -> Result<Self> {
        if is_fundamental(d) {
            Ok(FundamentalDiscriminant(d))
        } else {
            Err(Error::NotFundamental(d))
        }
    }

    // Callers must have checked `is_fundamental` (or an equivalent sieve).
    pub(crate) fn new_unchecked(d: i64) -> Self {
        debug_assert!(is_fundamental(d), "{d} not fundamental");
        FundamentalDiscriminant(d)
    }

    pub fn get(self) -> i64 {
        self.0
    }

    /// The conductor `|d|`.
    pub fn modulus(self) -> u64 {
        self.0.unsigned_abs()
    }

    /// `χ_d(n)`.
    pub fn chi(self, n: i64) -> i8 {
        kronecker(self.0, n)
    }

    /// `χ_d(-1)`: `+1` for `d > 0`, `-1` for `d < 0`.
    pub fn parity(self) -> i8 {
        if self.0 > 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_even(self) -> bool {
        self.0 > 0
    }
}

impl std::fmt::Display for FundamentalDiscriminant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

impl TryFrom<i64> for FundamentalDiscriminant {
    type Error = Error;

    fn try_from(d: i64) -> Result<Self> {
        FundamentalDiscriminant::new(d)
    }
}

/// Squarefree flags for every integer in `[lo, hi]`, `lo >= 1`.
pub fn squarefree_flags(lo: u64, hi: u64) -> Vec<bool> {
    assert!(lo >= 1, "squarefree sieve starts at 1");
    if hi < lo {
        return Vec::new();
    }
    let mut flags = vec![true; (hi - lo + 1) as usize];
    for &p in primes_up_to(isqrt(hi)).iter() {
        let q = p * p;
        let mut k = lo.div_ceil(q) * q;
        while k <= hi {
            flags[(k - lo) as usize] = false;
            k += q;
        }
    }
    flags
}

/// Fundamental discriminants in the signed range `[lo, hi]` via the
/// squarefree sieve, where both ends share a sign (or `lo = hi = 0`).
fn sieve_same_sign(lo: i64, hi: i64) -> Vec<FundamentalDiscriminant> {
    let (a, b) = if lo > 0 {
        (lo.unsigned_abs(), hi.unsigned_abs())
    } else {
        (hi.unsigned_abs().max(1), lo.unsigned_abs())
    };
    if b < a {
        return Vec::new();
    }
    let flags = squarefree_flags(a, b);
    let (a4, b4) = (a.div_ceil(4).max(1), b / 4);
    let flags4 = squarefree_flags(a4, b4);
    let sf = |m: u64| {
        if m >= a && m <= b {
            flags[(m - a) as usize]
        } else if m >= a4 && m <= b4 {
            flags4[(m - a4) as usize]
        } else {
            is_squarefree(m)
        }
    };
    (lo..=hi)
        .filter(|&d| d != 0 && classify(d, sf))
        .map(FundamentalDiscriminant::new_unchecked)
        .collect()
}

fn sieve_segment(lo: i64, hi: i64) -> Vec<FundamentalDiscriminant> {
    let mut out = Vec::new();
    if lo < 0 {
        out.extend(sieve_same_sign(lo, hi.min(-1)));
    }
    if hi > 0 {
        out.extend(sieve_same_sign(lo.max(1), hi));
    }
    out
}

/// All fundamental discriminants in `[lo, hi]`, ascending.
pub fn enumerate_fundamental(lo: i64, hi: i64) -> Result<Vec<FundamentalDiscriminant>> {
    if lo > hi {
        return Err(Error::invalid("lo", format!("{lo} > hi = {hi}")));
    }
    let span = hi.abs_diff(lo);
    if span <= SIEVE_THRESHOLD {
        return Ok((lo..=hi)
            .filter(|&d| is_fundamental(d))
            .map(FundamentalDiscriminant::new_unchecked)
            .collect());
    }
    let segments: Vec<(i64, i64)> = (0..=span / SEGMENT_LEN)
        .map(|k| {
            let start = lo + (k * SEGMENT_LEN) as i64;
            let end = (start as i128 + SEGMENT_LEN as i128 - 1).min(hi as i128) as i64;
            (start, end)
        })
        .filter(|(s, e)| s <= e)
        .collect();
    let parts: Vec<Vec<FundamentalDiscriminant>> = segments
        .into_par_iter()
        .map(|(s, e)| sieve_segment(s, e))
        .collect();
    Ok(parts.concat())
}

/// Fundamental discriminants with `lo_exclusive < |d| <= hi`, ascending in `d`.
pub fn fundamental_in_abs_window(lo_exclusive: u64, hi: u64) -> Vec<FundamentalDiscriminant> {
    if hi <= lo_exclusive {
        return Vec::new();
    }
    let (lo, hi) = ((lo_exclusive + 1) as i64, hi as i64);
    let mut out = enumerate_fundamental(-hi, -lo).expect("ordered range");
    out.extend(enumerate_fundamental(lo, hi).expect("ordered range"));
    out
}

/// Exact integer sum of `f(d)` over fundamental `d` with `lo_exclusive < |d| <= hi`.
///
/// Works segment by segment so memory stays `O(SEGMENT_LEN)` per worker; the
/// reduction is an integer sum and therefore independent of scheduling.
pub fn sum_over_abs_window<F>(lo_exclusive: u64, hi: u64, f: F) -> i64
where
    F: Fn(FundamentalDiscriminant) -> i64 + Sync,
{
    if hi <= lo_exclusive {
        return 0;
    }
    let first = lo_exclusive + 1;
    let blocks = (hi - first) / SEGMENT_LEN + 1;
    (0..blocks)
        .into_par_iter()
        .map(|k| {
            let a = first + k * SEGMENT_LEN;
            let b = (a + SEGMENT_LEN - 1).min(hi);
            let (a, b) = (a as i64, b as i64);
            sieve_same_sign(-b, -a)
                .into_iter()
                .chain(sieve_same_sign(a, b))
                .map(&f)
                .sum::<i64>()
        })
        .sum()
}

/// `n = n0 · n1²` with `n0` squarefree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub n: u64,
    pub n0: u64,
    pub n1: u64,
}

pub fn squarefree_decompose(n: u64) -> Result<SquarefreeDecomposition> {
    if n == 0 {
        return Err(Error::invalid("n", "must be >= 1"));
    }
    let (mut n0, mut n1) = (1u64, 1u64);
    for (p, e) in factorize(n) {
        if e % 2 == 1 {
            n0 *= p;
        }
        n1 *= p.pow(e / 2);
    }
    Ok(SquarefreeDecomposition { n, n0, n1 })
}

/// Möbius function.
pub fn mobius(n: u64) -> Result<i8> {
    if n == 0 {
        return Err(Error::invalid("n", "must be >= 1"));
    }
    let mut mu = 1i8;
    for (_, e) in factorize(n) {
        if e > 1 {
            return Ok(0);
        }
        mu = -mu;
    }
    Ok(mu)
}

/// `P₊(n)`, the largest prime factor.
pub fn largest_prime_factor(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::invalid("n", "must be >= 2"));
    }
    Ok(factorize(n).last().map(|&(p, _)| p).expect("n >= 2 has a prime factor"))
}

/// True iff `n` is a perfect square (including 0).
pub fn is_square(n: u64) -> bool {
    let r = isqrt(n);
    r * r == n
}
