//! End corrections for the truncated π/4 series.
//!
//! After summing `m` terms `1 − 1/3 + … ± 1/(2m−1)`, a correction `f(m)` is
//! appended with the sign of the omitted tail, `(−1)^m`. A correction is
//! judged by how well it keeps the corrected sum unchanged whether the
//! series is cut after the term with denominator `p` or the one before it:
//! `1/a_{p−1} + 1/a_p = 1/p`, where `a_p` is the reciprocal correction
//! after denominator `p` and `a_{p−1}` the one after denominator `p − 2`.
//!
//! `f` is indexed by the number of terms summed, so the correction after
//! denominator `p = 2m − 1` is `f(m)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{domain, Error, Result};
use crate::precision::{exact_sum, pi_quarter, rat, ExactRational};
use crate::scalar::{guard_digits_for, Real};
use crate::series::pi_series_partial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CorrectionRule {
    None,
    /// `a_p = 2p`: `f(m) = 1/(2(2m−1))`.
    A2p,
    /// `a_p = 2(p+1)`: `f(m) = 1/(4m)`.
    A2pPlus2,
    /// `1/(4m)`
    Cf1,
    /// `m/(4m² + 1)`
    Cf2,
    /// `(m² + 1)/(m(4m² + 5))`
    Cf3,
}

impl CorrectionRule {
    pub const ALL: [CorrectionRule; 6] = [
        CorrectionRule::None,
        CorrectionRule::A2p,
        CorrectionRule::A2pPlus2,
        CorrectionRule::Cf1,
        CorrectionRule::Cf2,
        CorrectionRule::Cf3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CorrectionRule::None => "none",
            CorrectionRule::A2p => "a2p",
            CorrectionRule::A2pPlus2 => "a2p_plus_2",
            CorrectionRule::Cf1 => "cf1",
            CorrectionRule::Cf2 => "cf2",
            CorrectionRule::Cf3 => "cf3",
        }
    }

    /// Correction magnitude `f(m)` after `m ≥ 1` summed terms.
    pub fn term(self, m: u64) -> ExactRational {
        if m == 0 {
            return ExactRational::zero();
        }
        let m = BigInt::from(m);
        match self {
            CorrectionRule::None => ExactRational::zero(),
            CorrectionRule::A2p => ExactRational::new(BigInt::one(), BigInt::from(2) * (BigInt::from(2) * &m - 1)),
            CorrectionRule::A2pPlus2 | CorrectionRule::Cf1 => ExactRational::new(BigInt::one(), BigInt::from(4) * m),
            CorrectionRule::Cf2 => {
                let den = BigInt::from(4) * &m * &m + 1;
                ExactRational::new(m, den)
            }
            CorrectionRule::Cf3 => {
                let num = &m * &m + 1;
                let den = &m * (BigInt::from(4) * &m * &m + 5);
                ExactRational::new(num, den)
            }
        }
    }

    /// `a_p`, the reciprocal correction after the term with odd denominator `p`,
    /// for the rules that are stated through a closed-form denominator.
    pub fn denominator(self, p: u64) -> Result<BigInt> {
        match self {
            CorrectionRule::A2p => Ok(BigInt::from(2) * p),
            CorrectionRule::A2pPlus2 => Ok(BigInt::from(2) * (p + 1)),
            other => Err(Error::UnsupportedRule(other.name())),
        }
    }
}

impl fmt::Display for CorrectionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CorrectionRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CorrectionRule::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "correction rule",
                name: s.to_string(),
            })
    }
}

fn check_odd(op: &'static str, p: u64) -> Result<()> {
    if p < 3 || p % 2 == 0 {
        return Err(domain(op, format!("p = {p} must be odd and at least 3")));
    }
    Ok(())
}

/// `1/a_{p−1} + 1/a_p − 1/p`: how far the rule is from leaving the corrected
/// sum invariant when the cut moves from denominator `p − 2` to `p`.
pub fn invariance_residual(p: u64, rule: CorrectionRule) -> Result<ExactRational> {
    check_odd("invariance_residual", p)?;
    let previous = rule.denominator(p - 2)?;
    let current = rule.denominator(p)?;
    Ok(ExactRational::new(BigInt::one(), previous) + ExactRational::new(BigInt::one(), current) - rat(1, p))
}

/// Closed form `1/((p−1)² − 1)` of the residual for `a_p = 2p`.
pub fn error_formula_a2p(p: u64) -> Result<ExactRational> {
    check_odd("error_formula_a2p", p)?;
    let q = BigInt::from(p - 1);
    Ok(ExactRational::new(BigInt::one(), &q * &q - 1))
}

/// `Σ_{p<m} (−1)^p/(2p+1) + (−1)^m·f(m)`.
pub fn corrected_pi<R: Real>(m: u64, rule: CorrectionRule, ctx: &R::Context) -> Result<R> {
    if m == 0 {
        return Err(domain("corrected_pi", "m must be at least 1"));
    }
    let wide = R::widen(ctx, guard_digits_for(m));
    let partial: R = pi_series_partial(m - 1, &wide)?;
    let correction = R::from_rational(&rule.term(m), &wide);
    let total = if m % 2 == 0 { partial + correction } else { partial - correction };
    Ok(total.in_context(ctx))
}

/// Exact value of [`corrected_pi`].
pub fn corrected_pi_exact(m: u64, rule: CorrectionRule) -> Result<ExactRational> {
    if m == 0 {
        return Err(domain("corrected_pi", "m must be at least 1"));
    }
    let partial = crate::series::arctan_partial_exact(&ExactRational::one(), m - 1)?;
    let sign = crate::precision::alternating_sign(m);
    Ok(partial + sign * rule.term(m))
}

/// `1/2 + Σ_{j=1}^{m} (−1)^(j+1)/((2j)² − 1)`, the series obtained by folding
/// the `a_p = 2p` correction into every term.
pub fn transformed_pi_exact(m: u64) -> ExactRational {
    let terms = (1..=m).map(|j| {
        let den = BigInt::from(2 * j).pow(2) - 1;
        let t = ExactRational::new(BigInt::one(), den);
        if j % 2 == 1 {
            t
        } else {
            -t
        }
    });
    rat(1, 2) + exact_sum(terms)
}

pub fn transformed_pi<R: Real>(m: u64, ctx: &R::Context) -> R {
    let wide = R::widen(ctx, guard_digits_for(m));
    let mut sum = R::from_ratio(1, 2, &wide).unwrap();
    for j in 1..=m {
        let den = BigInt::from(2 * j).pow(2) - 1;
        let t = R::from_rational(&ExactRational::new(BigInt::one(), den), &wide);
        sum = if j % 2 == 1 { sum + t } else { sum - t };
    }
    sum.in_context(ctx)
}

/// Alternating-series bound `1/((2m+2)² − 1)` on [`transformed_pi`].
pub fn transformed_bound(m: u64) -> ExactRational {
    let q = BigInt::from(2 * m + 2);
    ExactRational::new(BigInt::one(), &q * &q - 1)
}

/// Least-squares slope of `ln|corrected_pi(m) − π/4|` against `ln m`.
///
/// The error magnitudes are computed at full context precision; only the
/// logarithms and the regression are done in `f64`.
pub fn empirical_order<R: Real>(rule: CorrectionRule, m_values: &[u64], ctx: &R::Context) -> Result<f64> {
    let mut distinct = m_values.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() < 3 {
        return Err(Error::InsufficientData(format!(
            "need at least 3 distinct m values, got {}",
            distinct.len()
        )));
    }
    if let Some(small) = distinct.iter().find(|&&m| m < 4) {
        return Err(domain("empirical_order", format!("m = {small} < 4")));
    }
    let reference = pi_quarter::<R>(ctx);
    let points = distinct
        .iter()
        .map(|&m| {
            let err = (corrected_pi::<R>(m, rule, ctx)? - reference.clone()).abs();
            Ok(((m as f64).ln(), err.to_f64().ln()))
        })
        .collect::<Result<Vec<_>>>()?;
    if points.iter().any(|(_, y)| !y.is_finite()) {
        return Err(Error::InsufficientData(
            "error vanished at working precision; raise the digit count".into(),
        ));
    }
    Ok(least_squares_slope(&points))
}

pub(crate) fn least_squares_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|(x, y)| (x - mean_x) * (y - mean_y)).sum();
    let sxx: f64 = points.iter().map(|(x, _)| (x - mean_x).powi(2)).sum();
    sxy / sxx
}

/// Correction evaluated with its argument shifted by `offset`; only used to
/// show that shifted indexings do not give improving orders.
pub fn corrected_pi_shifted<R: Real>(m: u64, rule: CorrectionRule, offset: i64, ctx: &R::Context) -> Result<R> {
    let shifted = u64::try_from(m as i64 + offset).map_err(|_| domain("corrected_pi_shifted", "negative index"))?;
    let wide = R::widen(ctx, guard_digits_for(m));
    let partial: R = pi_series_partial(m - 1, &wide)?;
    let correction = R::from_rational(&rule.term(shifted), &wide);
    let total = if m % 2 == 0 { partial + correction } else { partial - correction };
    Ok(total.in_context(ctx))
}

/// First-omitted-term bound `1/(2m+1)` after `m` uncorrected terms.
pub fn uncorrected_bound(m: u64) -> ExactRational {
    rat(1, 2 * m + 1)
}
