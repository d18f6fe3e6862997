use num_traits::Signed;
use piseries::arcbit::{arc_bit_sum, sandwich_bounds, ArcBitGrid};
use piseries::correction::{corrected_pi_exact, error_formula_a2p, invariance_residual, transformed_bound, transformed_pi_exact};
use piseries::leibniz::{tangent_relation_residual, Integrand, QuadratureSpec};
use piseries::powersum::{power_sum_exact, t_of};
use piseries::precision::{arctan_reference, int, pi_quarter, rat};
use piseries::series::{arctan_partial, arctan_partial_exact, geometric_truncation, r_of};
use piseries::trig::{chord_sum, chord_sum_bound, second_difference_residual, sine_estimate, taylor_remainder};
use piseries::{BigReal, CorrectionRule, Precision};
use proptest::prelude::*;

fn ctx() -> Precision {
    Precision::new(40)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sandwich_width_is_exact(n in 1u64..400) {
        let (lo, hi) = sandwich_bounds(&ArcBitGrid::octant(n).unwrap()).unwrap();
        prop_assert_eq!(hi - lo, rat(1, 2 * n));
    }

    #[test]
    fn arc_bits_stay_inside_sandwich(n in 1u64..200, num in 1u64..=100) {
        let grid = ArcBitGrid::new(n, rat(num, 100)).unwrap();
        let (lo, hi) = sandwich_bounds(&grid).unwrap();
        let s: BigReal = arc_bit_sum(&grid, &ctx()).unwrap();
        let slack = BigReal::ulp(ctx()) * BigReal::from_int(10, ctx());
        prop_assert!(s >= &BigReal::from_rational(&lo, ctx()) - &slack);
        prop_assert!(s <= &BigReal::from_rational(&hi, ctx()) + &slack);
    }

    #[test]
    fn geometric_split_recombines(i in 0u64..=50, n in 1u64..=50, m in 1u32..=10) {
        prop_assume!(i <= n);
        let q = rat(i, n);
        let (head, tail) = geometric_truncation(&q, m).unwrap();
        let signed = if m % 2 == 0 { tail } else { -tail };
        prop_assert_eq!(head + signed, (int(1) + &q * &q).recip());
    }

    #[test]
    fn remainder_never_exceeds_plain_sum(p in 0u32..=6, n in 1u64..=120) {
        prop_assert!(r_of(p, n).unwrap() <= t_of(p, n).unwrap());
    }

    #[test]
    fn power_sum_shift(n in 2u64..=300, p in 0u32..=8) {
        let shifted = power_sum_exact(n, p).unwrap() - int(num_bigint::BigInt::from(n).pow(p));
        prop_assert_eq!(power_sum_exact(n - 1, p).unwrap(), shifted);
    }

    #[test]
    fn arctan_partial_within_first_omitted_term(num in 0i64..=1000, m in 0u64..40) {
        let x = BigReal::from_ratio(num, 1000, ctx()).unwrap();
        let st = arctan_partial(&x, m, &ctx()).unwrap();
        let truth = arctan_reference(&x, &ctx()).unwrap();
        let slack = BigReal::ulp(ctx()) * BigReal::from_int(m as i64 + 10, ctx());
        prop_assert!((st.partial_sum - truth).abs() <= &st.remainder_bound + &slack);
    }

    #[test]
    fn float_and_decimal_partials_agree(num in 0i64..=1000, m in 0u64..30) {
        let exact = arctan_partial_exact(&rat(num, 1000), m).unwrap();
        let f: f64 = arctan_partial(&(num as f64 / 1000.0), m, &()).unwrap().partial_sum;
        prop_assert!((f - exact.to_f64_lossy()).abs() < 1e-13);
    }

    #[test]
    fn a2p_residual_formula(k in 1u64..400) {
        let p = 2 * k + 1;
        prop_assert_eq!(invariance_residual(p, CorrectionRule::A2p).unwrap(), error_formula_a2p(p).unwrap());
    }

    #[test]
    fn corrections_beat_plain_sum(m in 2u64..150) {
        let pq = pi_quarter::<BigReal>(&ctx()).to_rational();
        let plain = (corrected_pi_exact(m, CorrectionRule::None).unwrap() - &pq).abs();
        let cf3 = (corrected_pi_exact(m, CorrectionRule::Cf3).unwrap() - &pq).abs();
        prop_assert!(cf3 < plain);
    }

    #[test]
    fn transformed_series_bound(m in 1u64..300) {
        let pq = pi_quarter::<BigReal>(&ctx()).to_rational();
        let d = (transformed_pi_exact(m) - pq).abs();
        prop_assert!(d <= transformed_bound(m) + rat(1, 10u64.pow(18)));
    }

    #[test]
    fn second_difference_vanishes(s in 1i64..=15_707, n in 2u64..300, j_frac in 0.0f64..1.0) {
        let j = 1 + ((n - 1) as f64 * j_frac) as u64 % (n - 1);
        let s = BigReal::from_ratio(s, 10_000, ctx()).unwrap();
        let r = second_difference_residual(&s, n, j, &ctx()).unwrap();
        prop_assert!(r.abs() <= BigReal::ulp(ctx()) * BigReal::from_int(100, ctx()));
    }

    #[test]
    fn sine_estimate_within_taylor_bound(s in 0i64..=15_707, k in 0u32..12) {
        let s = BigReal::from_ratio(s, 10_000, ctx()).unwrap();
        let truth = piseries::precision::sin_reference(&s, &ctx()).unwrap();
        let err = (sine_estimate(&s, k, &ctx()).unwrap() - truth).abs();
        let slack = BigReal::ulp(ctx()) * BigReal::from_int(10, ctx());
        prop_assert!(err <= &taylor_remainder(&s, 2 * k + 3, &ctx()) + &slack);
    }

    #[test]
    fn chord_sum_below_arc_within_bound(x in 1i64..=15_707, n in 10u64..2000) {
        let x = BigReal::from_ratio(x, 10_000, ctx()).unwrap();
        let l = chord_sum(&x, n, &ctx()).unwrap();
        prop_assert!(l <= x);
        prop_assert!(&x - &l <= chord_sum_bound(&x, n, &ctx()));
    }

    #[test]
    fn tangent_intercept_relation(x in 1i64..2000) {
        let x = BigReal::from_ratio(x, 1000, ctx()).unwrap();
        let r = tangent_relation_residual(&x, &ctx()).unwrap();
        prop_assert!(r.abs() <= BigReal::ulp(ctx()) * BigReal::from_int(50, ctx()));
    }

    #[test]
    fn monomial_quadrature_within_bound(k in 0u32..8, panels in 1u64..200, hi in 1i64..=20) {
        let spec = QuadratureSpec::trapezoid(BigReal::from_int(0, ctx()), BigReal::from_ratio(hi, 10, ctx()).unwrap(), panels).unwrap();
        let f = Integrand::Monomial(k);
        let v = piseries::leibniz::quad(f, &spec, &ctx()).unwrap();
        let exact = f.exact_integral(&spec.lower, &spec.upper, &ctx()).unwrap().unwrap();
        let bound = spec.error_bound(f, &ctx()).unwrap();
        let slack = BigReal::ulp(ctx()) * BigReal::from_int(100, ctx());
        prop_assert!((v - exact).abs() <= &bound + &slack);
    }
}

trait LossyF64 {
    fn to_f64_lossy(&self) -> f64;
}

impl LossyF64 for piseries::ExactRational {
    fn to_f64_lossy(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(self).unwrap()
    }
}
