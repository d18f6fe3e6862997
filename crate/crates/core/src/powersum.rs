//! Sums of equal powers of the natural numbers and their large-n behaviour.
//!
//! `S_n^p = Σ_{i=1}^{n} i^p` is approximated by `n^(p+1)/(p+1)`; the
//! normalised sums `t(p, n) = (1/n)·Σ_{i<n} (i/n)^(2p)` tend to
//! `T(p) = 1/(2p+1)`. All quantities here are exact.

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{domain, Result};
use crate::precision::{int, ExactRational};
use crate::scalar::Real;

/// Largest exponent accepted by the public interface.
pub const MAX_POWER: u32 = 16;

fn check_power(op: &'static str, p: u32) -> Result<()> {
    if p > MAX_POWER {
        return Err(domain(op, format!("p = {p} exceeds {MAX_POWER}")));
    }
    Ok(())
}

fn check_n(op: &'static str, n: u64) -> Result<()> {
    if n == 0 {
        return Err(domain(op, "n must be at least 1"));
    }
    Ok(())
}

fn raw_power_sum(n: u64, p: u32) -> BigInt {
    (1..=n).map(|i| BigInt::from(i).pow(p)).sum()
}

/// `S_n^p = Σ_{i=1}^{n} i^p`.
pub fn power_sum_exact(n: u64, p: u32) -> Result<ExactRational> {
    check_n("power_sum_exact", n)?;
    check_power("power_sum_exact", p)?;
    Ok(ExactRational::from_integer(raw_power_sum(n, p)))
}

/// `n^(p+1) / (p+1)`.
pub fn power_sum_approx(n: u64, p: u32) -> Result<ExactRational> {
    check_n("power_sum_approx", n)?;
    check_power("power_sum_approx", p)?;
    Ok(ExactRational::new(BigInt::from(n).pow(p + 1), BigInt::from(p + 1)))
}

/// `t(p, n) = (1/n)·Σ_{i=0}^{n-1} (i/n)^(2p)`; `t(0, n) = 1`.
pub fn t_of(p: u32, n: u64) -> Result<ExactRational> {
    check_n("t_of", n)?;
    check_power("t_of", p)?;
    // 0^0 = 1 contributes the i = 0 term when p = 0
    let head = if p == 0 { BigInt::one() } else { BigInt::zero() };
    let numer = head + raw_power_sum(n - 1, 2 * p);
    Ok(ExactRational::new(numer, BigInt::from(n).pow(2 * p + 1)))
}

/// `T(p) = 1/(2p+1)`, the limit of [`t_of`].
#[allow(non_snake_case)]
pub fn T_limit(p: u32) -> ExactRational {
    ExactRational::new(BigInt::one(), BigInt::from(2 * p as u64 + 1))
}

/// `Σ_{k=1}^{n-1} S_k^1`, the double sum of the first n−1 naturals.
pub fn repeated_sum(n: u64) -> Result<ExactRational> {
    if n < 2 {
        return Err(domain("repeated_sum", format!("n = {n} < 2")));
    }
    nested_power_sum(n, 1)
}

/// `n³/6`, the large-n value of [`repeated_sum`].
pub fn repeated_sum_approx(n: u64) -> ExactRational {
    ExactRational::new(BigInt::from(n).pow(3u32), BigInt::from(6))
}

/// `Σ_{k=1}^{n-1} S_k^p`.
pub fn nested_power_sum(n: u64, p: u32) -> Result<ExactRational> {
    check_n("nested_power_sum", n)?;
    check_power("nested_power_sum", p)?;
    let mut running = BigInt::zero();
    let mut total = BigInt::zero();
    for k in 1..n {
        running += BigInt::from(k).pow(p);
        total += &running;
    }
    Ok(ExactRational::from_integer(total))
}

/// Exact power sum, its approximation, and the relative error between them.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSumResult<R> {
    pub n: u64,
    pub p: u32,
    pub exact: ExactRational,
    pub approx: ExactRational,
    pub rel_err: R,
}

pub fn power_sum_report<R: Real>(n: u64, p: u32, ctx: &R::Context) -> Result<PowerSumResult<R>> {
    let exact = power_sum_exact(n, p)?;
    let approx = power_sum_approx(n, p)?;
    let rel = ((&exact - &approx) / &approx).abs();
    Ok(PowerSumResult {
        n,
        p,
        exact,
        approx,
        rel_err: R::from_rational(&rel, ctx),
    })
}

/// `n·S_n^(p−1) − S_n^p`, the left side of the induction step.
pub fn induction_lhs(n: u64, p: u32) -> Result<ExactRational> {
    if p == 0 {
        return Err(domain("induction_lhs", "p must be at least 1"));
    }
    Ok(int(n) * power_sum_exact(n, p - 1)? - power_sum_exact(n, p)?)
}
