//! Acceptance suite: one line per criterion, nonzero exit if any fails.

mod common;

use std::f64::consts::PI;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use quadsum_core::arith::{enumerate_fundamental, fundamental_in_abs_window, kronecker};
use quadsum_core::char_sums::{search_max, MaxMode, SearchWindow};
use quadsum_core::discriminant_avg::{average_report, discriminant_char_average, fit_reports, main_term};
use quadsum_core::numeric::ZETA2;
use quadsum_core::polya::{cosine_sum, gauss_sum, polya_truncated, sine_sum, PolyaParams};
use quadsum_core::report::{render_report, AverageRow, Format};
use quadsum_core::resonance::{
    build_resonator, default_resonator, moment1, moment2, predicted_lower_bound, ratio_bound, rmrn_lhs,
    DiscriminantWindow, ResonatorOverrides, ResonatorSpec, ZRule,
};

use common::rel_diff;

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn override_spec(lambda: f64, lo: f64, hi: f64, y: f64) -> ResonatorSpec {
    let o = ResonatorOverrides {
        lambda: Some(lambda),
        window: Some((lo, hi)),
    };
    build_resonator(y, 0.1, o).expect("valid override")
}

fn override_specs() -> Vec<(&'static str, ResonatorSpec)> {
    vec![
        ("{11,13}", override_spec(3.0, 11.0, 13.0, 200.0)),
        ("[2,7]", override_spec(2.0, 2.0, 7.0, 60.0)),
        ("[3,40]", override_spec(4.0, 3.0, 40.0, 1000.0)),
        ("[17,97]", override_spec(5.0, 17.0, 97.0, 5000.0)),
    ]
}

// 1. Kronecker symbol against Euler's criterion and multiplicativity.
fn kronecker_exhaustive() -> Result<String, String> {
    let start = Instant::now();
    let ds: Vec<i64> = (-1000..=1000).filter(|&d| common::fundamental(d)).collect();
    let mut mismatches = 0usize;
    for &d in &ds {
        for n in 1..=1000i64 {
            if kronecker(d, n) != common::chi(d, n) {
                mismatches += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(mismatches == 0, || format!("{mismatches} mismatches"))?;
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("{} discriminants x 1000 values, 0 mismatches, {elapsed:.2?}", ds.len()))
}

// 2. Full periods sum to zero.
fn period_zero() -> Result<String, String> {
    let ds = enumerate_fundamental(-10_000, 10_000).map_err(|e| e.to_string())?;
    let bad: Vec<i64> = ds
        .iter()
        .filter(|d| (1..=d.modulus() as i64).map(|n| d.chi(n) as i64).sum::<i64>() != 0)
        .map(|d| d.get())
        .collect();
    ensure(bad.is_empty(), || format!("nonzero periods for {bad:?}"))?;
    Ok(format!("{} discriminants, 0 exceptions", ds.len()))
}

// 3. |τ|² = |d| with the right phase.
fn gauss_sums() -> Result<String, String> {
    let ds = enumerate_fundamental(-500, 500).map_err(|e| e.to_string())?;
    let mut worst: f64 = 0.0;
    for d in &ds {
        let g = gauss_sum(*d);
        let q = d.modulus() as f64;
        worst = worst.max((g.norm_sqr() - q).abs() / q);
        let phase_ok = if d.is_even() {
            g.re > 0.0 && g.im.abs() <= 1e-9 * q.sqrt()
        } else {
            g.im > 0.0 && g.re.abs() <= 1e-9 * q.sqrt()
        };
        ensure(phase_ok, || format!("phase wrong for d = {d}: {g}"))?;
    }
    ensure(worst <= 1e-9, || format!("max relative deviation {worst:e}"))?;
    Ok(format!("{} discriminants, max rel. deviation {worst:.2e}", ds.len()))
}

// 4. Count of |d| ≤ 10⁷ against X/ζ(2).
fn count_main_term() -> Result<String, String> {
    let start = Instant::now();
    let count = discriminant_char_average(10_000_000, 1).map_err(|e| e.to_string())?;
    let dev = (count as f64 * ZETA2 / 1e7 - 1.0).abs();
    ensure(dev <= 0.005, || format!("deviation {dev}"))?;
    Ok(format!("count {count}, |count·ζ(2)/X − 1| = {dev:.2e}, {:.2?}", start.elapsed()))
}

// 5. Square n at X = 10⁶.
fn square_main_term() -> Result<String, String> {
    let mut parts = Vec::new();
    for n in [4u64, 9, 36] {
        let exact = discriminant_char_average(1_000_000, n).map_err(|e| e.to_string())?;
        let main = main_term(1_000_000, n).map_err(|e| e.to_string())?;
        let ratio = exact as f64 / main;
        ensure((ratio - 1.0).abs() <= 0.03, || format!("n = {n}: exact/main = {ratio}"))?;
        parts.push(format!("n={n}: {ratio:.6}"));
    }
    Ok(parts.join(", "))
}

// 6. Cancellation for non-square n.
fn cancellation_slopes() -> Result<String, String> {
    let mut parts = Vec::new();
    for n in [2u64, 3, 5, 6, 7, 10] {
        let reports = [10_000u64, 100_000, 1_000_000]
            .iter()
            .map(|&x| average_report(x, n, 0.1))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        let slope = fit_reports(&reports).map_err(|e| format!("n = {n}: {e}"))?;
        ensure(slope < 0.75, || format!("n = {n}: slope {slope}"))?;
        parts.push(format!("n={n}: {slope:.3}"));
    }
    Ok(parts.join(", "))
}

// 7. Truncated expansion over (10⁴, 2·10⁴] at x = 100, plus parity identities.
fn polya_batch() -> Result<String, String> {
    let x = 100.0;
    let ds = fundamental_in_abs_window(10_000, 20_000);
    let mut worst: f64 = 0.0;
    for &d in &ds {
        let p = PolyaParams::from_cut(d, x).map_err(|e| e.to_string())?;
        let r = polya_truncated(&p);
        let budget = 10.0 * r.error_budget;
        ensure(r.abs_error <= budget, || format!("d = {d}: error {} > {budget}", r.abs_error))?;
        worst = worst.max(r.abs_error / r.error_budget);
        let vanishing = if d.is_even() {
            cosine_sum(d, p.z, x)
        } else {
            sine_sum(d, p.z, x)
        }
        .map_err(|e| e.to_string())?;
        ensure(vanishing.abs() <= 1e-12, || format!("d = {d}: parity part {vanishing:e}"))?;
    }
    Ok(format!("{} discriminants, max abs_error/(1 + |d|log|d|/z) = {worst:.4}", ds.len()))
}

// 8. max C_d(z)² ≥ M₂/M₁.
fn resonance_inequality() -> Result<String, String> {
    let mut checked = 0;
    let mut tightest = f64::INFINITY;
    for scale in [1_000u64, 10_000] {
        let window = DiscriminantWindow::dyadic(scale).map_err(|e| e.to_string())?;
        for x in [10.0, 50.0] {
            let default = default_resonator(scale, x, 0.1).map_err(|e| e.to_string())?;
            ensure(default.window_empty(), || format!("default resonator not degenerate at X = {scale}"))?;
            let mut specs = vec![("default", default)];
            specs.extend(override_specs());
            for (name, spec) in &specs {
                let rep = ratio_bound(spec, &window, x, ZRule::FixedAtUpper).map_err(|e| e.to_string())?;
                ensure(rep.max_cd_sq >= rep.ratio * (1.0 - 1e-12), || {
                    format!("X={scale} x={x} {name}: max {} < ratio {}", rep.max_cd_sq, rep.ratio)
                })?;
                tightest = tightest.min(rep.max_cd_sq / rep.ratio);
                checked += 1;
            }
        }
    }
    let spec = override_spec(3.0, 11.0, 13.0, 200.0);
    for (lo, hi, d) in [(10u64, 11u64, -11i64), (22, 23, -23)] {
        let window = DiscriminantWindow::new(lo, hi).map_err(|e| e.to_string())?;
        let ds = window.discriminants().map_err(|e| e.to_string())?;
        ensure(ds.len() == 1 && ds[0].get() == d, || format!("({lo}, {hi}] is not {{{d}}}"))?;
        let rep = ratio_bound(&spec, &window, 3.0, ZRule::FixedAtUpper).map_err(|e| e.to_string())?;
        ensure(rep.ratio == rep.max_cd_sq, || format!("singleton {d}: {} != {}", rep.ratio, rep.max_cd_sq))?;
    }
    Ok(format!("{checked} window/resonator pairs, min max/ratio = {tightest:.4}; singletons exact"))
}

// Independent M₁, M₂ by plain loops with the oracle character.
fn brute_moments(spec_params: (f64, f64, f64, f64), lo: u64, hi: u64, x: f64) -> (f64, f64, usize) {
    let (lambda, wlo, whi, y) = spec_params;
    let z = ((hi as f64) * x).sqrt() * (hi as f64).ln();
    let zmax = z.floor() as i64;
    let coeffs: Vec<(u64, f64)> = (1..=y.floor() as u64)
        .map(|n| (n, common::resonator_coeff(n, lambda, wlo, whi)))
        .filter(|&(_, r)| r != 0.0)
        .collect();
    let (mut m1, mut m2, mut count) = (0.0, 0.0, 0);
    for a in lo + 1..=hi {
        for d in [-(a as i64), a as i64] {
            if !common::fundamental(d) {
                continue;
            }
            count += 1;
            let r: f64 = coeffs.iter().map(|&(n, c)| c * common::chi(d, n as i64) as f64).sum();
            let c: f64 = (-zmax..=zmax)
                .filter(|&m| m != 0)
                .map(|m| common::chi(d, m) as f64 / m as f64 * (1.0 - (2.0 * PI * m as f64 / x).cos()))
                .sum();
            m1 += r * r;
            m2 += r * r * c * c;
        }
    }
    (m1, m2, count)
}

// 9. Moments against brute force.
fn moment_oracles() -> Result<String, String> {
    let mut worst: f64 = 0.0;
    let mut cases = 0;
    let params = [(3.0, 11.0, 13.0, 200.0), (4.0, 3.0, 40.0, 1000.0), (2.0, 2.0, 7.0, 60.0)];
    for scale in [100u64, 300] {
        let window = DiscriminantWindow::dyadic(scale).map_err(|e| e.to_string())?;
        for x in [10.0, 50.0] {
            for &(lambda, lo, hi, y) in &params {
                let spec = override_spec(lambda, lo, hi, y);
                let m1 = moment1(&spec, &window).map_err(|e| e.to_string())?;
                let m2 = moment2(&spec, &window, x, ZRule::FixedAtUpper).map_err(|e| e.to_string())?;
                let (b1, b2, count) = brute_moments((lambda, lo, hi, y), scale, 2 * scale, x);
                ensure(count <= 200, || format!("window X={scale} has {count} discriminants"))?;
                let e = rel_diff(m1.exact, b1).max(rel_diff(m2.exact, b2));
                ensure(e <= 1e-10, || format!("X={scale} x={x} λ={lambda}: rel. diff {e:e}"))?;
                worst = worst.max(e);
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases, max rel. diff {worst:.2e}"))
}

// 10. Quadruple-sum evaluator.
fn rmrn_oracle() -> Result<String, String> {
    let spec = override_spec(3.0, 11.0, 13.0, 200.0);
    let rep = rmrn_lhs(&spec, 200.0, 15.0).map_err(|e| e.to_string())?;
    let r = |n: u64| common::resonator_coeff(n, 3.0, 11.0, 13.0);
    let mut acc = 0.0;
    for m1 in 1..=15u64 {
        for n1 in 1..=15u64 {
            if common::gcd(m1, n1) != 1 {
                continue;
            }
            let mx = m1.max(n1);
            let inner: f64 = (1..=200 / mx)
                .filter(|&d| common::gcd(d, m1 * n1) == 1)
                .map(|d| r(d) * r(d))
                .sum();
            acc += (m1 * n1) as f64 * r(m1) * r(n1) / (mx * mx * mx) as f64 * inner;
        }
    }
    let euler: f64 = (2..=200u64)
        .filter(|&p| common::is_prime(p))
        .map(|p| 1.0 + r(p) * r(p))
        .product();
    let oracle = acc / euler;
    let diff = (rep.lhs - oracle).abs();
    ensure(diff <= 1e-12 * oracle.max(1.0), || format!("lhs {} vs oracle {oracle}", rep.lhs))?;
    let trivial = build_resonator(1.0, 0.1, ResonatorOverrides::default()).map_err(|e| e.to_string())?;
    let t = rmrn_lhs(&trivial, 200.0, 15.0).map_err(|e| e.to_string())?;
    ensure(t.lhs == 1.0, || format!("trivial resonator gives {}", t.lhs))?;
    Ok(format!("lhs = {:.15}, |diff| = {diff:.1e}; trivial = 1", rep.lhs))
}

// 11. Closed-form prediction.
fn prediction() -> Result<String, String> {
    let got = predicted_lower_bound(1e10, 1e3).map_err(|e| e.to_string())?;
    // log 10¹⁰ = 23.02585, log log 10¹⁰ = 3.13659, √(23.02585/3.13659) = 2.70940,
    // exp(0.70711·2.70940) = 6.7928, √10⁷ = 3162.28.
    let hand = 3162.278 * 6.7928;
    let rel = (got / hand - 1.0).abs();
    ensure(rel <= 0.005, || format!("{got} vs hand {hand}"))?;
    let rel_ref = (got / 2.148e4 - 1.0).abs();
    ensure(rel_ref <= 0.005, || format!("{got} vs 2.148e4"))?;
    Ok(format!("bound = {got:.2}, hand = {hand:.2}, rel. diff {rel:.1e}"))
}

fn all_reports() -> String {
    let mut out = String::new();
    let search = search_max(&SearchWindow::new(10_000, 100.0).unwrap(), MaxMode::Signed).unwrap();
    out += &render_report(&[search], Format::Csv);
    let window = DiscriminantWindow::dyadic(1_000).unwrap();
    for (_, spec) in override_specs() {
        let rep = ratio_bound(&spec, &window, 10.0, ZRule::FixedAtUpper).unwrap();
        out += &render_report(std::slice::from_ref(&rep), Format::Csv);
        out += &render_report(&[rep], Format::Json);
    }
    let polya: Vec<_> = fundamental_in_abs_window(10_000, 10_400)
        .into_iter()
        .map(|d| polya_truncated(&PolyaParams::from_cut(d, 100.0).unwrap()))
        .collect();
    out += &render_report(&polya, Format::Csv);
    let reports: Vec<_> = [10_000u64, 100_000, 1_000_000]
        .iter()
        .map(|&x| average_report(x, 6, 0.1).unwrap())
        .collect();
    let slope = fit_reports(&reports).unwrap();
    let rows: Vec<_> = reports.into_iter().map(|report| AverageRow { report, slope }).collect();
    out += &render_report(&rows, Format::Csv);
    out += &render_report(&rows, Format::Json);
    let rm = rmrn_lhs(&override_spec(4.0, 3.0, 40.0, 1000.0), 1000.0, 100.0).unwrap();
    out += &render_report(&[rm], Format::Csv);
    out
}

// 12. Reports are byte-identical across thread counts.
fn determinism() -> Result<String, String> {
    let mut outputs = Vec::new();
    for threads in [1usize, 4, 8] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| e.to_string())?;
        outputs.push(pool.install(all_reports));
    }
    ensure(outputs[0] == outputs[1] && outputs[1] == outputs[2], || {
        "reports differ between thread counts".to_string()
    })?;
    Ok(format!("{} bytes identical across 1, 4, 8 threads", outputs[0].len()))
}

fn main() {
    let checks: [(u8, &str, Check); 12] = [
        (1, "Kronecker symbol vs Euler-criterion oracle", kronecker_exhaustive),
        (2, "full-period sums vanish", period_zero),
        (3, "Gauss sum magnitude and phase", gauss_sums),
        (4, "discriminant count vs X/ζ(2)", count_main_term),
        (5, "square-n averages vs main term", square_main_term),
        (6, "non-square cancellation exponent", cancellation_slopes),
        (7, "truncated Fourier expansion and parity", polya_batch),
        (8, "resonance weighted-mean inequality", resonance_inequality),
        (9, "moments vs brute force", moment_oracles),
        (10, "quadruple-sum evaluator vs triple loop", rmrn_oracle),
        (11, "closed-form large-value prediction", prediction),
        (12, "thread-count determinism", determinism),
    ];
    let mut failed = 0;
    for (id, name, check) in checks {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("[PASS] criterion {id:>2}: {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] criterion {id:>2}: {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criterion/criteria failed");
        std::process::exit(1);
    }
    println!("all 12 criteria passed");
}
