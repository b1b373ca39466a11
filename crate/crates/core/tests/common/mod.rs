//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the arithmetic of the library under test.

#![allow(dead_code)]

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Trial division by every integer.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn squarefree(n: u64) -> bool {
    n != 0 && factor(n).iter().all(|&(_, e)| e == 1)
}

pub fn fundamental(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    if d.rem_euclid(4) == 1 {
        return squarefree(d.unsigned_abs());
    }
    if d % 4 == 0 {
        let m = d / 4;
        return (m.rem_euclid(4) == 2 || m.rem_euclid(4) == 3) && squarefree(m.unsigned_abs());
    }
    false
}

fn pow_mod(base: u64, mut e: u64, m: u64) -> u64 {
    let (mut b, mut acc) = (base as u128 % m as u128, 1u128);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m as u128;
        }
        b = b * b % m as u128;
        e >>= 1;
    }
    acc as u64
}

/// χ_d at a prime: Euler's criterion for odd p, the mod-8 rule at 2.
pub fn chi_prime(d: i64, p: u64) -> i8 {
    if p == 2 {
        return match d.rem_euclid(8) {
            1 | 7 => 1,
            3 | 5 => -1,
            _ => 0,
        };
    }
    let a = d.rem_euclid(p as i64) as u64;
    if a == 0 {
        return 0;
    }
    if pow_mod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// χ_d(n) by complete multiplicativity over the factorisation of n.
pub fn chi(d: i64, n: i64) -> i8 {
    assert!(n != 0);
    let sign = if n < 0 && d < 0 { -1 } else { 1 };
    factor(n.unsigned_abs())
        .into_iter()
        .map(|(p, e)| chi_prime(d, p).pow(e))
        .product::<i8>()
        * sign
}

/// r(n) straight from the definition: squarefree, every prime factor in
/// [lo, hi], r(p) = λ/(√p log p).
pub fn resonator_coeff(n: u64, lambda: f64, lo: f64, hi: f64) -> f64 {
    let mut acc = 1.0;
    for (p, e) in factor(n) {
        let pf = p as f64;
        if e > 1 || pf < lo || pf > hi {
            return 0.0;
        }
        acc *= lambda / (pf.sqrt() * pf.ln());
    }
    acc
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factor(n) == vec![(n, 1)]
}

pub fn rel_diff(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}
