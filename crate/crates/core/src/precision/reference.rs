//! Reference transcendental functions used as oracles.
//!
//! These deliberately take routes different from the methods under test:
//! arctan reduces its argument by half-angle steps before summing, and sine
//! sums its Taylor series at `x / 3^k` and climbs back with the triple-angle
//! formula. Everything runs with guard digits and is truncated to the
//! caller's context at the end.

use crate::error::{domain, Result};
use crate::scalar::Real;

const GUARD: u32 = 12;

/// arctan(x) for |x| ≤ 1, to full context precision.
///
/// The argument is halved with `atan(x) = 2·atan(x / (1 + √(1 + x²)))`
/// until it is below 1/8, so arctan(1) is evaluated as `2·atan(√2 − 1)` and
/// further; the remaining alternating series stops at the first omitted
/// term below one guarded ulp.
pub fn arctan_reference<R: Real>(x: &R, ctx: &R::Context) -> Result<R> {
    let one = R::one();
    if x.abs() > one {
        return Err(domain("arctan_reference", format!("|x| > 1 (x = {x})")));
    }
    if x.is_zero() {
        return Ok(R::zero());
    }
    let wide = R::widen(ctx, GUARD);
    let eps = R::ulp(&wide);
    let eighth = R::from_ratio(1, 8, &wide)?;

    let mut y = x.in_context(&wide);
    let mut doublings = 0u32;
    while y.abs() > eighth {
        let root = (one.clone() + y.clone() * y.clone()).sqrt()?;
        y = y / (one.clone() + root);
        doublings += 1;
    }

    let y2 = y.clone() * y.clone();
    let mut power = y.clone();
    let mut sum = y;
    let mut k: i64 = 0;
    loop {
        k += 1;
        power = power * y2.clone();
        let term = power.clone() / R::from_int(2 * k + 1, &wide);
        if term.abs() < eps {
            break;
        }
        if k % 2 == 1 {
            sum = sum - term;
        } else {
            sum = sum + term;
        }
    }
    let scale = R::from_int(1i64 << doublings, &wide);
    Ok((sum * scale).in_context(ctx))
}

/// π/4 as `arctan(1)`.
pub fn pi_quarter<R: Real>(ctx: &R::Context) -> R {
    arctan_reference(&R::one(), ctx).expect("arctan(1) is in domain")
}

pub fn pi_reference<R: Real>(ctx: &R::Context) -> R {
    let wide = R::widen(ctx, 2);
    (pi_quarter::<R>(&wide) * R::from_int(4, &wide)).in_context(ctx)
}

/// sin(x) for |x| ≤ 4.
pub fn sin_reference<R: Real>(x: &R, ctx: &R::Context) -> Result<R> {
    if x.abs() > R::from_int(4, ctx) {
        return Err(domain("sin_reference", format!("|x| > 4 (x = {x})")));
    }
    Ok(sin_wide(x, ctx, GUARD + 6).in_context(ctx))
}

fn sin_wide<R: Real>(x: &R, ctx: &R::Context, guard: u32) -> R {
    let wide = R::widen(ctx, guard);
    let eps = R::ulp(&wide);
    let three = R::from_int(3, &wide);
    let four = R::from_int(4, &wide);
    let limit = R::from_ratio(1, 64, &wide).unwrap();

    let mut y = x.in_context(&wide);
    let mut triplings = 0u32;
    while y.abs() > limit {
        y = y / three.clone();
        triplings += 1;
    }

    let y2 = y.clone() * y.clone();
    let mut term = y.clone();
    let mut sum = y;
    let mut k: i64 = 0;
    loop {
        k += 1;
        term = -(term * y2.clone()) / R::from_int((2 * k) * (2 * k + 1), &wide);
        if term.abs() < eps {
            break;
        }
        sum = sum + term.clone();
    }
    for _ in 0..triplings {
        sum = three.clone() * sum.clone() - four.clone() * sum.clone() * sum.clone() * sum;
    }
    sum
}

/// cos(x) for |x| ≤ 4, via `1 − 2·sin²(x/2)`.
pub fn cos_reference<R: Real>(x: &R, ctx: &R::Context) -> Result<R> {
    if x.abs() > R::from_int(4, ctx) {
        return Err(domain("cos_reference", format!("|x| > 4 (x = {x})")));
    }
    let wide = R::widen(ctx, GUARD);
    let half = x.in_context(&wide) / R::from_int(2, &wide);
    let s = sin_wide(&half, &wide, 6);
    Ok((R::one() - R::from_int(2, &wide) * s.clone() * s).in_context(ctx))
}

/// tan(x) for 0 ≤ x < π/2.
pub fn tan_reference<R: Real>(x: &R, ctx: &R::Context) -> Result<R> {
    let wide = R::widen(ctx, GUARD);
    let s = sin_reference(x, &wide)?;
    let c = cos_reference(x, &wide)?;
    if c <= R::zero() {
        return Err(domain("tan_reference", format!("cos(x) ≤ 0 at x = {x}")));
    }
    Ok((s / c).in_context(ctx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::{BigReal, Precision};
    use num_traits::Zero;

    const PI_100: &str = "3.1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679";

    fn ctx() -> Precision {
        Precision::new(50)
    }

    fn close(a: &BigReal, b: &BigReal, ulps: i64) -> bool {
        (a - b).abs() <= BigReal::ulp(ctx()) * BigReal::from_int(ulps, Precision::new(0))
    }

    #[test]
    fn arctan_examples() {
        assert!(arctan_reference(&BigReal::from_int(0, ctx()), &ctx()).unwrap().is_zero());
        let quarter = pi_quarter::<BigReal>(&ctx());
        let fixture: BigReal = PI_100.parse().unwrap();
        let fixture = (&fixture / &BigReal::from_int(4, Precision::new(100))).rescale(50);
        assert!(close(&quarter, &fixture, 1), "{quarter} vs {fixture}");
        assert!(quarter.to_string().starts_with("0.78539816339744830961"));

        let half = BigReal::from_ratio(1, 2, ctx()).unwrap();
        let at = arctan_reference(&half, &ctx()).unwrap();
        assert!(at.to_string().starts_with("0.46364760900080611621"));
    }

    #[test]
    fn arctan_half_by_bisection() {
        // invert tan on [0, 1] by bisection using the reference tangent
        let c = Precision::new(30);
        let target = BigReal::from_ratio(1, 2, c).unwrap();
        let mut lo = BigReal::from_int(0, c);
        let mut hi = BigReal::from_int(1, c);
        for _ in 0..90 {
            let mid = (&lo + &hi) / BigReal::from_int(2, c);
            if tan_reference(&mid, &c).unwrap() < target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let at = arctan_reference(&target, &c).unwrap();
        assert!((&at - &lo).abs() < BigReal::from_ratio(1, num_bigint::BigInt::from(10).pow(25), c).unwrap());
    }

    #[test]
    fn arctan_rejects_out_of_domain() {
        let x = BigReal::from_ratio(11, 10, ctx()).unwrap();
        assert!(arctan_reference(&x, &ctx()).is_err());
        assert!(arctan_reference(&1.5f64, &()).is_err());
    }

    #[test]
    fn arctan_odd_and_float() {
        let x = BigReal::from_ratio(-3, 10, ctx()).unwrap();
        let pos = arctan_reference(&-x.clone(), &ctx()).unwrap();
        assert_eq!(arctan_reference(&x, &ctx()).unwrap(), -pos);
        let f = arctan_reference(&0.3f64, &()).unwrap();
        assert!((f - 0.3f64.atan()).abs() < 1e-15);
        let g = arctan_reference(&1.0f32, &()).unwrap();
        assert!((g - std::f32::consts::FRAC_PI_4).abs() < 1e-6);
    }

    #[test]
    fn complementary_arctan_identity() {
        let quarter = pi_quarter::<BigReal>(&ctx());
        for k in 1..=9 {
            let x = BigReal::from_ratio(k, 10, ctx()).unwrap();
            let one = BigReal::from_int(1, ctx());
            let y = (&one - &x) / (&one + &x);
            let sum = arctan_reference(&x, &ctx()).unwrap() + arctan_reference(&y, &ctx()).unwrap();
            assert!(close(&sum, &quarter, 10), "x = 0.{k}: {sum}");
        }
    }

    #[test]
    fn pi_matches_fixture() {
        let pi = pi_reference::<BigReal>(&ctx());
        assert!(PI_100.starts_with(&pi.to_string()[..50]));
    }

    #[test]
    fn sine_cosine_fixtures() {
        let one = BigReal::from_int(1, ctx());
        let s = sin_reference(&one, &ctx()).unwrap();
        assert!(s.to_string().starts_with("0.84147098480789650665250232163029899962256306079837"));
        let c = cos_reference(&one, &ctx()).unwrap();
        assert!(c.to_string().starts_with("0.54030230586813971740093660744297660373231042061792"));
        let pythag = &s * &s + &c * &c;
        assert!(close(&pythag, &one, 10));
        let f = sin_reference(&1.2f64, &()).unwrap();
        assert!((f - 1.2f64.sin()).abs() < 1e-15);
    }

    #[test]
    fn sin_of_pi_over_six() {
        let pi = pi_reference::<BigReal>(&Precision::new(60));
        let x = (&pi / &BigReal::from_int(6, Precision::new(60))).rescale(50);
        let s = sin_reference(&x, &ctx()).unwrap();
        let half = BigReal::from_ratio(1, 2, ctx()).unwrap();
        assert!(close(&s, &half, 5), "{s}");
    }
}
