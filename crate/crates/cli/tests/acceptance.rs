//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero on any failure.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use piseries::arcbit::{arc_bit_sum, gap_bound, measure_gap, sandwich_bounds, ArcBitGrid};
use piseries::correction::{
    corrected_pi, empirical_order, error_formula_a2p, invariance_residual, transformed_bound, transformed_pi,
    transformed_pi_exact,
};
use piseries::leibniz::{quad, remainder_integral_bound, transmutation_arctan, Integrand, QuadratureSpec};
use piseries::powersum::{induction_lhs, nested_power_sum, power_sum_approx, power_sum_exact, t_of, T_limit};
use piseries::precision::{int, pi_quarter, rat, sin_reference, tan_reference};
use piseries::report::{read_csv, Method};
use piseries::series::{arc_sum_direct, arctan_partial, decomposed_arc_sum, r_of};
use piseries::trig::{
    chord_sum, chord_sum_bound, second_difference_residual, sine_estimate, sine_series_coefficient, SineRefinement,
};
use piseries::{BigReal, ConvergenceRecordBig, CorrectionRule, Precision, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const DIGITS: u32 = 50;

fn ctx() -> Precision {
    Precision::new(DIGITS)
}

fn br(num: i64, den: i64) -> BigReal {
    BigReal::from_ratio(num, den, ctx()).unwrap()
}

fn ulps(k: i64) -> BigReal {
    BigReal::ulp(ctx()) * br(k, 1)
}

fn pq() -> BigReal {
    pi_quarter(&ctx())
}

fn sci(v: &BigReal) -> String {
    format!("{:.3e}", v.to_f64())
}

type Outcome = Result<(bool, String)>;

fn fail(msg: String) -> Outcome {
    Ok((false, msg))
}

fn sandwich_exactness() -> Outcome {
    for n in [1u64, 10, 100, 1000, 2000] {
        let (lo, hi) = sandwich_bounds(&ArcBitGrid::octant(n)?)?;
        if hi - lo != rat(1, 2 * n) {
            return fail(format!("width differs from 1/(2n) at n = {n}"));
        }
    }
    Ok((true, "upper - lower == 1/(2n) for n = 1, 10, 100, 1000, 2000".into()))
}

fn arc_bit_convergence() -> Outcome {
    let mut parts = Vec::new();
    for n in [2u64, 10, 100, 1000] {
        let gap = measure_gap::<BigReal>(&ArcBitGrid::octant(n)?, &ctx())?;
        if gap.d_n.is_negative() {
            return fail(format!("d({n}) = {} is negative", gap.d_n));
        }
        parts.push(format!("d({n}) = {}", sci(&gap.d_n)));
        if n == 1000 {
            if gap.d_n > br(5001, 10_000_000_000) {
                return fail(format!("d(1000) = {} exceeds 5.001e-7", gap.d_n));
            }
            let grid = ArcBitGrid::octant(1000)?;
            let err = (arc_bit_sum::<BigReal>(&grid, &ctx())? - pq()).abs();
            let slack = ulps(100);
            let certificate = gap_bound::<BigReal>(1000, &ctx())? + slack;
            if err > certificate {
                return fail(format!("|sum - pi/4| = {} above gap bound", sci(&err)));
            }
            parts.push(format!("|sum(1000) - pi/4| = {} <= {}", sci(&err), sci(&certificate)));
        }
    }
    Ok((true, parts.join(", ")))
}

fn series_remainder() -> Outcome {
    let one = BigReal::from_int(1, ctx());
    let mut prev_above: Option<bool> = None;
    for m in 0..=200u64 {
        let s = arctan_partial(&one, m, &ctx())?.partial_sum;
        let d = &s - &pq();
        if d.abs() > br(1, 2 * m as i64 + 3) {
            return fail(format!("|partial({m}) - pi/4| = {} above 1/(2m+3)", sci(&d.abs())));
        }
        let above = !d.is_negative();
        if prev_above == Some(above) {
            return fail(format!("partials {} and {m} on the same side", m - 1));
        }
        prev_above = Some(above);
    }
    Ok((true, "m = 0..200 within 1/(2m+3), alternating sides".into()))
}

fn decomposition_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..20 {
        let n = rng.gen_range(1..=200u64);
        let m = rng.gen_range(1..=8u32);
        let (head, tail) = decomposed_arc_sum(n, m)?;
        let recombined = if m % 2 == 0 { head + tail } else { head - tail };
        if recombined != arc_sum_direct(n)? {
            return fail(format!("decomposition inexact at n = {n}, M = {m}"));
        }
    }
    for p in 0..=6u32 {
        for n in 1..=200u64 {
            if r_of(p, n)? > t_of(p, n)? {
                return fail(format!("r > t at p = {p}, n = {n}"));
            }
        }
    }
    Ok((true, "20 random (n, M) exact; r <= t for p <= 6, n <= 200".into()))
}

fn power_sums() -> Outcome {
    for p in 1..=6u32 {
        for n in 2..=200u64 {
            if induction_lhs(n, p)? != nested_power_sum(n, p - 1)? {
                return fail(format!("induction identity fails at p = {p}, n = {n}"));
            }
        }
        for n in 1..=200u64 {
            let diff = (power_sum_exact(n, p)? - power_sum_approx(n, p)?).abs();
            if diff > int(BigInt::from(n).pow(p)) {
                return fail(format!("|S - n^(p+1)/(p+1)| > n^p at p = {p}, n = {n}"));
            }
        }
        for n in [100u64, 1000] {
            if (t_of(p, n)? - T_limit(p)).abs() > rat(2 * p as u64, n) {
                return fail(format!("|t - 1/(2p+1)| > 2p/n at p = {p}, n = {n}"));
            }
        }
    }
    Ok((true, "induction, order and limit checks for p <= 6".into()))
}

fn correction_identities() -> Outcome {
    for p in (3..=201u64).step_by(2) {
        if invariance_residual(p, CorrectionRule::A2p)? != error_formula_a2p(p)? {
            return fail(format!("residual differs from 1/((p-1)^2-1) at p = {p}"));
        }
    }
    let rules = [CorrectionRule::None, CorrectionRule::Cf1, CorrectionRule::Cf2, CorrectionRule::Cf3];
    for m in [10u64, 50, 200] {
        let errs = rules
            .iter()
            .map(|&r| Ok((corrected_pi::<BigReal>(m, r, &ctx())? - pq()).abs()))
            .collect::<Result<Vec<_>>>()?;
        if !errs.windows(2).all(|w| w[0] > w[1]) {
            return fail(format!("error ordering fails at m = {m}"));
        }
    }
    let ms = [10u64, 100, 1000];
    let none = empirical_order::<BigReal>(CorrectionRule::None, &ms, &ctx())?;
    let cf1 = empirical_order::<BigReal>(CorrectionRule::Cf1, &ms, &ctx())?;
    let ok = (-1.1..=-0.9).contains(&none) && cf1 <= -2.5;
    Ok((ok, format!("exact residuals p = 3..201, ordering holds, slopes none {none:.4} cf1 {cf1:.4}")))
}

fn transformed_series() -> Outcome {
    for m in 1..=100u64 {
        let d = (transformed_pi::<BigReal>(m, &ctx()) - pq()).abs();
        if d > BigReal::from_rational(&transformed_bound(m), ctx()) {
            return fail(format!("bound fails at m = {m}"));
        }
    }
    let expected = rat(1, 2) + rat(1, 3) - rat(1, 15);
    let got = transformed_pi_exact(2);
    Ok((got == expected, format!("m = 1..100 within 1/((2m+2)^2-1); transformed(2) = {got}")))
}

fn sine_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut worst = BigReal::zero();
    for _ in 0..50 {
        let s = br(rng.gen_range(1..=15_707), 10_000);
        let n = rng.gen_range(2..=200u64);
        let j = rng.gen_range(1..n);
        worst = worst.max(second_difference_residual(&s, n, j, &ctx())?.abs());
    }
    if worst > ulps(100) {
        return fail(format!("second-difference residual {} above 100 ulp", sci(&worst)));
    }
    for k in 0..=8u32 {
        let p = SineRefinement::after(k);
        if p.coefficients.iter().enumerate().any(|(j, c)| *c != sine_series_coefficient(j as u32)) {
            return fail(format!("coefficients differ at k = {k}"));
        }
    }
    let one = br(1, 1);
    let err = (sine_estimate(&one, 5, &ctx())? - sin_reference(&one, &ctx())?).abs();
    let limit = BigReal::from_rational(&rat(1, 6_227_020_800u64), ctx());
    Ok((err <= limit, format!("residual <= 100 ulp, exact coefficients k <= 8, |P5(1) - sin 1| = {}", sci(&err))))
}

fn chord_sums() -> Outcome {
    for x in [br(1, 2), br(1, 1), br(3, 2)] {
        for n in [10u64, 100, 1000] {
            let d = (chord_sum(&x, n, &ctx())? - x.clone()).abs();
            if d > chord_sum_bound(&x, n, &ctx()) {
                return fail(format!("chord bound fails at x = {x}, n = {n}"));
            }
        }
    }
    for k in 1..=20i64 {
        // evenly spaced in (0, 1.55]
        let x = br(155 * k, 2000);
        if !(tan_reference(&x, &ctx())? >= x && x >= sin_reference(&x, &ctx())?) {
            return fail(format!("tan x >= x >= sin x fails at x = {x}"));
        }
    }
    Ok((true, "chord bound on 9 cells; tan >= x >= sin at 20 points".into()))
}

fn leibniz_cross_check() -> Outcome {
    let area = transmutation_arctan(&br(1, 1), 1_000_000, &ctx())?;
    let to_pi = (&area - &pq()).abs();
    if to_pi > BigReal::from_rational(&rat(1, 100_000_000_000u64), ctx()) {
        return fail(format!("|transmutation - pi/4| = {}", sci(&to_pi)));
    }
    let bits: BigReal = arc_bit_sum(&ArcBitGrid::octant(10_000)?, &ctx())?;
    let between = (&area - &bits).abs();
    if between > br(1, 1_000_000) {
        return fail(format!("|transmutation - arc bits| = {}", sci(&between)));
    }
    for x in [br(1, 2), br(1, 1)] {
        for n in 0..=10u32 {
            let spec = QuadratureSpec::trapezoid(BigReal::zero(), x.clone(), 2000)?;
            let v = quad(Integrand::PowerRatio(2 * n + 2), &spec, &ctx())?;
            if v > remainder_integral_bound(&x, n, &ctx())? {
                return fail(format!("remainder integral not dominated at x = {x}, n = {n}"));
            }
        }
    }
    Ok((true, format!("to pi/4 {}, to arc bits {}, dominance n <= 10", sci(&to_pi), sci(&between))))
}

fn compare_determinism() -> Outcome {
    let methods: Vec<String> = Method::full_set().iter().map(Method::label).collect();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_piseries"))
            .args(["compare", "--digits", "50", "--angle", "0.75", "--params", "1,10,100,1000", "--methods"])
            .arg(methods.join(","))
            .output()
            .expect("run piseries")
    };
    let (a, b) = (run(), run());
    if !a.status.success() || !b.status.success() {
        return fail(format!("compare failed: {}", String::from_utf8_lossy(&a.stderr)));
    }
    let rows: Vec<ConvergenceRecordBig> = read_csv(a.stdout.as_slice())?;
    let same = a.stdout == b.stdout;
    Ok((same, format!("{} rows, {} bytes, identical = {same}", rows.len(), a.stdout.len())))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { id: 1, name: "sandwich exactness", limit: secs(5), run: sandwich_exactness },
        Criterion { id: 2, name: "arc-bit convergence with gap certificate", limit: secs(30), run: arc_bit_convergence },
        Criterion { id: 3, name: "pi-series remainder", limit: secs(5), run: series_remainder },
        Criterion { id: 4, name: "finite decomposition identity", limit: None, run: decomposition_identity },
        Criterion { id: 5, name: "power-sum suite", limit: None, run: power_sums },
        Criterion { id: 6, name: "correction identities", limit: None, run: correction_identities },
        Criterion { id: 7, name: "transformed series", limit: None, run: transformed_series },
        Criterion { id: 8, name: "sine suite", limit: None, run: sine_suite },
        Criterion { id: 9, name: "chord sum", limit: None, run: chord_sums },
        Criterion { id: 10, name: "transmutation cross-check", limit: secs(60), run: leibniz_cross_check },
        Criterion { id: 11, name: "compare determinism", limit: None, run: compare_determinism },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let (mut ok, mut detail) = (c.run)().unwrap_or_else(|e| (false, format!("error: {e}")));
        let took = start.elapsed();
        if let Some(limit) = c.limit {
            if took > limit {
                ok = false;
                detail.push_str(&format!("; exceeded {}s limit", limit.as_secs()));
            }
        }
        let tag = if ok { "PASS" } else { "FAIL" };
        println!("{tag} [{:>2}] {}: {detail} ({:.2}s)", c.id, c.name, took.as_secs_f64());
        failed += usize::from(!ok);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
