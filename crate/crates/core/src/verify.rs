//! Property checks grouped by module, each reporting what it measured.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arcbit::{arc_bit_sum, measure_gap, sandwich_bounds, ArcBitGrid};
use crate::correction::{
    corrected_pi, error_formula_a2p, invariance_residual, transformed_bound, transformed_pi, CorrectionRule,
};
use crate::error::{Error, Result};
use crate::leibniz::{
    quad, remainder_integral_bound, tangent_relation_residual, transmutation_arctan, Integrand, QuadratureSpec,
};
use crate::powersum::{induction_lhs, nested_power_sum, power_sum_approx, power_sum_exact, t_of, T_limit};
use crate::precision::{
    arctan_reference, int, pi_quarter, rat, sin_reference, tan_reference, BigReal, ExactRational, Precision,
};
use crate::series::{arc_sum_direct, arctan_partial, decomposed_arc_sum, r_of};
use crate::trig::{
    chord_sum, chord_sum_bound, recursion_residual, second_difference_residual, sine_estimate,
    sine_series_coefficient, taylor_remainder, versine_estimate, versine_reference, SineRefinement,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Precision,
    Arcbit,
    Powersum,
    Series,
    Correction,
    Trig,
    Leibniz,
}

impl Suite {
    pub const MODULES: [Suite; 7] = [
        Suite::Precision,
        Suite::Arcbit,
        Suite::Powersum,
        Suite::Series,
        Suite::Correction,
        Suite::Trig,
        Suite::Leibniz,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Precision => "precision",
            Suite::Arcbit => "arcbit",
            Suite::Powersum => "powersum",
            Suite::Series => "series",
            Suite::Correction => "correction",
            Suite::Trig => "trig",
            Suite::Leibniz => "leibniz",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(Suite::All)
            .chain(Suite::MODULES)
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "suite",
                name: s.to_string(),
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub suite: Suite,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {} ({})", self.suite, self.name, self.detail)
    }
}

type Outcome = Result<(bool, String)>;

struct Runner {
    suite: Suite,
    checks: Vec<Check>,
}

impl Runner {
    fn new(suite: Suite) -> Self {
        Self { suite, checks: Vec::new() }
    }

    fn check(&mut self, name: &'static str, f: impl FnOnce() -> Outcome) {
        let (passed, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
        self.checks.push(Check {
            suite: self.suite,
            name,
            passed,
            detail,
        });
    }
}

/// Runs `suite` at `digits` of precision; randomized checks draw from a
/// generator seeded with `seed`.
pub fn run(suite: Suite, digits: u32, seed: u64) -> Vec<Check> {
    let ctx = Precision::new(digits);
    match suite {
        Suite::All => Suite::MODULES.iter().flat_map(|&s| run(s, digits, seed)).collect(),
        Suite::Precision => precision_suite(ctx, seed),
        Suite::Arcbit => arcbit_suite(ctx),
        Suite::Powersum => powersum_suite(),
        Suite::Series => series_suite(ctx, seed),
        Suite::Correction => correction_suite(ctx),
        Suite::Trig => trig_suite(ctx, seed),
        Suite::Leibniz => leibniz_suite(ctx, seed),
    }
}

fn ulp(ctx: Precision) -> BigReal {
    BigReal::ulp(ctx)
}

/// `|v|` in units of the last place, for reporting.
fn in_ulps(v: &BigReal, ctx: Precision) -> String {
    let r = (v.abs() / ulp(ctx)).rescale(0);
    r.to_string()
}

fn br(num: i64, den: i64, ctx: Precision) -> BigReal {
    BigReal::from_ratio(num, den, ctx).expect("nonzero denominator")
}

fn sci(v: &BigReal) -> String {
    format!("{:.3e}", v.to_f64())
}

fn precision_suite(ctx: Precision, seed: u64) -> Vec<Check> {
    let mut r = Runner::new(Suite::Precision);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let scale = ctx.digits;
    let random_real = |lo: i64, hi: i64, rng: &mut ChaCha8Rng| {
        let whole = rng.gen_range(lo..hi);
        let frac: String = (0..scale).map(|_| char::from(b'0' + rng.gen_range(0..10u8))).collect();
        let m: BigInt = format!("{whole}{frac}").parse().expect("digits");
        BigReal::from_parts(m, scale)
    };
    let pairs: Vec<(BigReal, BigReal)> = (0..200)
        .map(|_| (random_real(-1000, 1000, &mut rng), random_real(-1000, 1000, &mut rng)))
        .collect();
    r.check("fixed-point addition is exact", || {
        let ok = pairs.iter().all(|(a, b)| &(a + b) - b == *a);
        Ok((ok, format!("{} random pairs", pairs.len())))
    });
    let xs: Vec<BigReal> = (0..1000).map(|_| random_real(0, 10, &mut rng)).collect();
    r.check("sqrt brackets its argument", || {
        let mut bad = 0;
        for x in &xs {
            let s = x.sqrt()?.to_rational();
            let hi = &s + ulp(ctx).to_rational();
            let x = x.to_rational();
            if !(&s * &s <= x && x < &hi * &hi) {
                bad += 1;
            }
        }
        Ok((bad == 0, format!("{bad} of {} outside", xs.len())))
    });
    let triples: Vec<[ExactRational; 3]> = (0..200)
        .map(|_| {
            let mut q = || rat(rng.gen_range(-10_000i64..10_000), rng.gen_range(1i64..10_000));
            [q(), q(), q()]
        })
        .collect();
    r.check("rational field axioms", || {
        let ok = triples.iter().all(|[a, b, c]| {
            (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c
        });
        Ok((ok, format!("{} random triples", triples.len())))
    });
    r.check("arctan complementary identity within 10 ulp", || {
        let pq: BigReal = pi_quarter(&ctx);
        let mut worst = BigReal::zero();
        for k in 1..=9 {
            let x = br(k, 10, ctx);
            let one = br(1, 1, ctx);
            let y = (&one - &x) / (&one + &x);
            let d = (arctan_reference(&x, &ctx)? + arctan_reference(&y, &ctx)? - pq.clone()).abs();
            worst = worst.max(d);
        }
        Ok((worst <= &ulp(ctx) * &br(10, 1, ctx), format!("max {} ulp", in_ulps(&worst, ctx))))
    });
    r.checks
}

fn arcbit_suite(ctx: Precision) -> Vec<Check> {
    let mut r = Runner::new(Suite::Arcbit);
    let pq: BigReal = pi_quarter(&ctx);
    r.check("exact sandwich width 1/(2n)", || {
        let ns: Vec<u64> = (1..=300).chain([500, 1000, 1500, 2000]).collect();
        for &n in &ns {
            let (lo, hi) = sandwich_bounds(&ArcBitGrid::octant(n)?)?;
            if hi - lo != rat(1, 2 * n) {
                return Ok((false, format!("mismatch at n = {n}")));
            }
        }
        Ok((true, format!("n = 1..300, 500, 1000, 1500, 2000 ({} sizes)", ns.len())))
    });
    r.check("arc-bit sum inside the sandwich", || {
        let slack = &ulp(ctx) * &br(10, 1, ctx);
        for n in [1u64, 2, 10, 100, 1000] {
            let grid = ArcBitGrid::octant(n)?;
            let (lo, hi) = sandwich_bounds(&grid)?;
            let s: BigReal = arc_bit_sum(&grid, &ctx)?;
            let lo = BigReal::from_rational(&lo, ctx);
            let hi = BigReal::from_rational(&hi, ctx);
            if s < &lo - &slack || s > &hi + &slack {
                return Ok((false, format!("n = {n}: {s} outside [{lo}, {hi}]")));
            }
        }
        Ok((true, "n = 1, 2, 10, 100, 1000".into()))
    });
    r.check("chord gap within its bound", || {
        let mut parts = Vec::new();
        let mut ok = true;
        for n in [2u64, 10, 100, 1000] {
            let g = measure_gap::<BigReal>(&ArcBitGrid::octant(n)?, &ctx)?;
            ok &= !g.d_n.is_negative() && g.d_n <= g.bound;
            parts.push(format!("d({n}) = {}", sci(&g.d_n)));
        }
        Ok((ok, parts.join(", ")))
    });
    r.check("arc pieces reassemble pi/4 within 100 ulp", || {
        let mut worst = BigReal::zero();
        for n in [2u64, 10, 100] {
            let g = measure_gap::<BigReal>(&ArcBitGrid::octant(n)?, &ctx)?;
            worst = worst.max((g.arc_sum - pq.clone()).abs());
        }
        Ok((worst <= &ulp(ctx) * &br(100, 1, ctx), format!("max {} ulp", in_ulps(&worst, ctx))))
    });
    r.check("error shrinks when n doubles", || {
        let err = |n: u64| -> Result<BigReal> {
            Ok((arc_bit_sum::<BigReal>(&ArcBitGrid::octant(n)?, &ctx)? - pq.clone()).abs())
        };
        let mut parts = Vec::new();
        let mut ok = true;
        for n in [10u64, 100, 1000] {
            let (e1, e2) = (err(n)?, err(2 * n)?);
            ok &= e2 < e1;
            parts.push(format!("{n}: {} -> {}", sci(&e1), sci(&e2)));
        }
        Ok((ok, parts.join(", ")))
    });
    r.check("general upper limit tracks arctan", || {
        let grid = ArcBitGrid::new(1000, rat(1, 2))?;
        let s: BigReal = arc_bit_sum(&grid, &ctx)?;
        let d = (s - arctan_reference(&br(1, 2, ctx), &ctx)?).abs();
        Ok((d <= br(1, 1_000_000, ctx), format!("x = 0.5, n = 1000: {}", sci(&d))))
    });
    r.checks
}

fn powersum_suite() -> Vec<Check> {
    let mut r = Runner::new(Suite::Powersum);
    r.check("induction identity", || {
        for p in 1..=6u32 {
            for n in 2..=200u64 {
                if induction_lhs(n, p)? != nested_power_sum(n, p - 1)? {
                    return Ok((false, format!("fails at p = {p}, n = {n}")));
                }
            }
        }
        Ok((true, "p = 1..6, n = 2..200".into()))
    });
    r.check("approximation error at most n^p", || {
        for p in 1..=6u32 {
            for n in 1..=200u64 {
                let diff = (power_sum_exact(n, p)? - power_sum_approx(n, p)?).abs();
                if diff > int(BigInt::from(n).pow(p)) {
                    return Ok((false, format!("fails at p = {p}, n = {n}")));
                }
            }
        }
        Ok((true, "p = 1..6, n = 1..200".into()))
    });
    r.check("t(p, n) within 2p/n of 1/(2p+1)", || {
        let mut worst = 0.0f64;
        for p in 1..=6u32 {
            for n in [100u64, 1000] {
                let d = (t_of(p, n)? - T_limit(p)).abs();
                let allowed = rat(2 * p as u64, n);
                if d > allowed {
                    return Ok((false, format!("fails at p = {p}, n = {n}")));
                }
                worst = worst.max(ratio_f64(&(d / allowed)));
            }
        }
        Ok((true, format!("largest error/allowance {worst:.3}")))
    });
    r.check("shift identity", || {
        for p in 0..=6u32 {
            for n in 2..=200u64 {
                let lhs = power_sum_exact(n - 1, p)?;
                let rhs = power_sum_exact(n, p)? - int(BigInt::from(n).pow(p));
                if lhs != rhs {
                    return Ok((false, format!("fails at p = {p}, n = {n}")));
                }
            }
        }
        Ok((true, "p = 0..6, n = 2..200".into()))
    });
    r.checks
}

fn ratio_f64(q: &ExactRational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

fn series_suite(ctx: Precision, seed: u64) -> Vec<Check> {
    let mut r = Runner::new(Suite::Series);
    let pq: BigReal = pi_quarter(&ctx);
    r.check("remainder below 1/(2m+3) and partials bracket pi/4", || {
        let wide = Precision::new(ctx.digits + 6);
        let mut series = crate::series::ArctanSeries::new(&BigReal::from_int(1, wide), &wide)?;
        for m in 0..=200u64 {
            let st = series.next().expect("unbounded");
            let s = st.partial_sum.rescale(ctx.digits);
            let d = &s - &pq;
            if d.abs() > br(1, 2 * m as i64 + 3, ctx) {
                return Ok((false, format!("bound fails at m = {m}")));
            }
            // even m overshoots, odd m undershoots
            if (m % 2 == 0) == d.is_negative() {
                return Ok((false, format!("bracketing fails at m = {m}")));
            }
        }
        Ok((true, "m = 0..200".into()))
    });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(u64, u32)> = (0..20).map(|_| (rng.gen_range(1..=200), rng.gen_range(1..=8))).collect();
    r.check("finite decomposition is exact", || {
        for &(n, m) in &pairs {
            let (head, tail) = decomposed_arc_sum(n, m)?;
            let signed = if m % 2 == 0 { tail } else { -tail };
            if head + signed != arc_sum_direct(n)? {
                return Ok((false, format!("fails at n = {n}, M = {m}")));
            }
        }
        Ok((true, format!("{} random (n, M) pairs", pairs.len())))
    });
    r.check("r(p, n) <= t(p, n)", || {
        for p in 0..=6u32 {
            for n in 1..=200u64 {
                if r_of(p, n)? > t_of(p, n)? {
                    return Ok((false, format!("fails at p = {p}, n = {n}")));
                }
            }
        }
        Ok((true, "p = 0..6, n = 1..200".into()))
    });
    r.check("partial sums within first omitted term of arctan", || {
        let mut parts = Vec::new();
        for x in [br(1, 10, ctx), br(1, 2, ctx), br(9, 10, ctx)] {
            let truth = arctan_reference(&x, &ctx)?;
            for m in [5u64, 20] {
                let st = arctan_partial(&x, m, &ctx)?;
                let d = (st.partial_sum.clone() - truth.clone()).abs();
                if d > st.remainder_bound {
                    return Ok((false, format!("x = {x}, m = {m}: {} > {}", sci(&d), sci(&st.remainder_bound))));
                }
                parts.push(sci(&d));
            }
        }
        Ok((true, format!("errors {}", parts.join(" "))))
    });
    r.checks
}

fn correction_suite(ctx: Precision) -> Vec<Check> {
    let mut r = Runner::new(Suite::Correction);
    let pq: BigReal = pi_quarter(&ctx);
    r.check("a2p residual equals 1/((p-1)^2 - 1)", || {
        for p in (3..=201u64).step_by(2) {
            if invariance_residual(p, CorrectionRule::A2p)? != error_formula_a2p(p)? {
                return Ok((false, format!("fails at p = {p}")));
            }
        }
        Ok((true, "odd p = 3..201".into()))
    });
    r.check("a_p = 2(p+1) beats a_p = 2p", || {
        for p in (5..=201u64).step_by(2) {
            let better = invariance_residual(p, CorrectionRule::A2pPlus2)?.abs();
            if better >= invariance_residual(p, CorrectionRule::A2p)?.abs() {
                return Ok((false, format!("fails at p = {p}")));
            }
        }
        Ok((true, "odd p = 5..201".into()))
    });
    r.check("error ordering none > cf1 > cf2 > cf3", || {
        let rules = [CorrectionRule::None, CorrectionRule::Cf1, CorrectionRule::Cf2, CorrectionRule::Cf3];
        let mut parts = Vec::new();
        for m in [10u64, 50, 200] {
            let errs = rules
                .iter()
                .map(|&rule| Ok((corrected_pi::<BigReal>(m, rule, &ctx)? - pq.clone()).abs()))
                .collect::<Result<Vec<_>>>()?;
            if !errs.windows(2).all(|w| w[0] > w[1]) {
                return Ok((false, format!("fails at m = {m}")));
            }
            parts.push(format!("m = {m}: cf3 {}", sci(&errs[3])));
        }
        Ok((true, parts.join(", ")))
    });
    r.check("uncorrected rule equals the plain partial sum", || {
        let mut worst = BigReal::zero();
        for m in [1u64, 2, 10, 50, 200] {
            let a: BigReal = corrected_pi(m, CorrectionRule::None, &ctx)?;
            let b = arctan_partial(&BigReal::from_int(1, ctx), m - 1, &ctx)?.partial_sum;
            worst = worst.max((a - b).abs());
        }
        Ok((worst <= &ulp(ctx) * &br(10, 1, ctx), format!("max {} ulp", in_ulps(&worst, ctx))))
    });
    r.check("transformed series within 1/((2m+2)^2 - 1)", || {
        for m in 1..=100u64 {
            let d = (transformed_pi::<BigReal>(m, &ctx) - pq.clone()).abs();
            if d > BigReal::from_rational(&transformed_bound(m), ctx) {
                return Ok((false, format!("fails at m = {m}")));
            }
        }
        Ok((true, "m = 1..100".into()))
    });
    r.check("empirical orders", || {
        let ms = [10u64, 100, 1000];
        let mut parts = Vec::new();
        let mut slopes = Vec::new();
        for rule in [CorrectionRule::None, CorrectionRule::Cf1, CorrectionRule::Cf2, CorrectionRule::Cf3] {
            let s = crate::correction::empirical_order::<BigReal>(rule, &ms, &ctx)?;
            parts.push(format!("{rule} {s:.3}"));
            slopes.push(s);
        }
        let ok = (-1.1..=-0.9).contains(&slopes[0]) && slopes[1] <= -2.5;
        Ok((ok, parts.join(", ")))
    });
    r.checks
}

fn trig_suite(ctx: Precision, seed: u64) -> Vec<Check> {
    let mut r = Runner::new(Suite::Trig);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let triples: Vec<(BigReal, u64, u64)> = (0..50)
        .map(|_| {
            let s = br(rng.gen_range(1..=15_707), 10_000, ctx);
            let n = rng.gen_range(2..=200u64);
            let j = rng.gen_range(1..n);
            (s, n, j)
        })
        .collect();
    r.check("second-difference residual within 100 ulp", || {
        let mut worst = BigReal::zero();
        for (s, n, j) in &triples {
            worst = worst.max(second_difference_residual(s, *n, *j, &ctx)?.abs());
        }
        Ok((worst <= &ulp(ctx) * &br(100, 1, ctx), format!("50 random triples, max {} ulp", in_ulps(&worst, ctx))))
    });
    r.check("global recursion within 1000 ulp", || {
        let mut worst = BigReal::zero();
        for (s, n) in [(br(1, 1, ctx), 50u64), (br(7, 10, ctx), 20), (br(3, 2, ctx), 100)] {
            worst = worst.max(recursion_residual(&s, n, &ctx)?.abs());
        }
        Ok((worst <= &ulp(ctx) * &br(1000, 1, ctx), format!("max {} ulp", in_ulps(&worst, ctx))))
    });
    r.check("refined coefficients are (-1)^j/(2j+1)!", || {
        for k in 0..=8u32 {
            let p = SineRefinement::after(k);
            let ok = p
                .coefficients
                .iter()
                .enumerate()
                .all(|(j, c)| *c == sine_series_coefficient(j as u32));
            if !ok || p.coefficients.len() != k as usize + 1 {
                return Ok((false, format!("fails at k = {k}")));
            }
        }
        Ok((true, "k = 0..8".into()))
    });
    r.check("sine and versine within Taylor remainder", || {
        for s in [br(1, 4, ctx), br(1, 2, ctx), br(1, 1, ctx), br(3, 2, ctx)] {
            let sin_t = sin_reference(&s, &ctx)?;
            let ver_t = versine_reference(&s, &ctx)?;
            for k in 1..=6u32 {
                let e = (sine_estimate(&s, k, &ctx)? - sin_t.clone()).abs();
                let v = (versine_estimate(&s, k, &ctx)? - ver_t.clone()).abs();
                if e > taylor_remainder(&s, 2 * k + 3, &ctx) || v > taylor_remainder(&s, 2 * k + 2, &ctx) {
                    return Ok((false, format!("fails at s = {s}, k = {k}")));
                }
            }
        }
        let one = br(1, 1, ctx);
        let e5 = (sine_estimate(&one, 5, &ctx)? - sin_reference(&one, &ctx)?).abs();
        Ok((true, format!("|sine_estimate(1, 5) - sin 1| = {}", sci(&e5))))
    });
    r.check("chord sum within 1.1 x^3/(24 n^2)", || {
        let mut worst = 0.0f64;
        for x in [br(1, 2, ctx), br(1, 1, ctx), br(3, 2, ctx)] {
            for n in [10u64, 100, 1000] {
                let d = (chord_sum(&x, n, &ctx)? - x.clone()).abs();
                let b = chord_sum_bound(&x, n, &ctx);
                if d > b {
                    return Ok((false, format!("fails at x = {x}, n = {n}")));
                }
                worst = worst.max(d.to_f64() / b.to_f64());
            }
        }
        Ok((true, format!("largest error/bound {worst:.4}")))
    });
    r.check("tan x >= x >= sin x", || {
        for k in 1..=20i64 {
            let x = br(k * 1555, 20_000, ctx);
            if !(tan_reference(&x, &ctx)? >= x && x >= sin_reference(&x, &ctx)?) {
                return Ok((false, format!("fails at x = {x}")));
            }
        }
        Ok((true, "20 points in (0, 1.555]".into()))
    });
    r.checks
}

fn leibniz_suite(ctx: Precision, seed: u64) -> Vec<Check> {
    let mut r = Runner::new(Suite::Leibniz);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let xs: Vec<BigReal> = (0..20).map(|_| br(rng.gen_range(50..=1950), 1000, ctx)).collect();
    r.check("tangent relation y = z(2 - x)", || {
        let mut worst = BigReal::zero();
        for x in &xs {
            worst = worst.max(tangent_relation_residual(x, &ctx)?.abs());
        }
        Ok((worst <= &ulp(ctx) * &br(50, 1, ctx), format!("20 random x, max {} ulp", in_ulps(&worst, ctx))))
    });
    r.check("transmutation recovers arctan", || {
        let mut parts = Vec::new();
        for z in [br(1, 4, ctx), br(1, 2, ctx), br(1, 1, ctx)] {
            let truth = arctan_reference(&z, &ctx)?;
            for p in [1000u64, 10_000] {
                let d = (transmutation_arctan(&z, p, &ctx)? - truth.clone()).abs();
                // 10·(z/P)²·M with M = 2 for t²/(1+t²)
                let zp = &z / &BigReal::from_int(p, ctx);
                let tol = &(&zp * &zp) * &br(20, 1, ctx);
                if d > tol {
                    return Ok((false, format!("z = {z}, P = {p}: {}", sci(&d))));
                }
                parts.push(sci(&d));
            }
        }
        Ok((true, format!("errors {}", parts.join(" "))))
    });
    r.check("remainder integral dominated", || {
        for x in [br(1, 2, ctx), br(1, 1, ctx)] {
            for n in 0..=10u32 {
                let spec = QuadratureSpec::trapezoid(BigReal::zero(), x.clone(), 2000)?;
                let v = quad(Integrand::PowerRatio(2 * n + 2), &spec, &ctx)?;
                if v > remainder_integral_bound(&x, n, &ctx)? {
                    return Ok((false, format!("fails at x = {x}, n = {n}")));
                }
            }
        }
        Ok((true, "n = 0..10, x = 0.5, 1".into()))
    });
    r.check("trapezoid error ratio on halving", || {
        let pq: BigReal = pi_quarter(&ctx);
        let err = |p: u64| -> Result<BigReal> {
            let spec = QuadratureSpec::trapezoid(BigReal::zero(), br(1, 1, ctx), p)?;
            Ok((quad(Integrand::Reciprocal, &spec, &ctx)? - pq.clone()).abs())
        };
        let mut ratios = Vec::new();
        for p in [64u64, 256, 1024] {
            ratios.push((err(p)? / err(2 * p)?).to_f64());
        }
        let ok = ratios.iter().all(|q| (3.5..=4.5).contains(q));
        let shown: Vec<String> = ratios.iter().map(|q| format!("{q:.4}")).collect();
        Ok((ok, format!("ratios {}", shown.join(" "))))
    });
    r.check("transmutation agrees with arc bits", || {
        let area = transmutation_arctan(&br(1, 1, ctx), 1_000_000, &ctx)?;
        let bits: BigReal = arc_bit_sum(&ArcBitGrid::octant(10_000)?, &ctx)?;
        let d = (area - bits).abs();
        Ok((d <= br(1, 1_000_000, ctx), format!("difference {}", sci(&d))))
    });
    r.checks
}
