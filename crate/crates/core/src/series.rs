//! The alternating arctan series and the truncated geometric expansion
//! behind it.
//!
//! Partial sums are certified with the first-omitted-term bound. The
//! finite-n decomposition `(1/n)·Σ 1/(1+(i/n)²) = Σ_{p<M} (−1)^p t(p,n)
//! + (−1)^M r(M,n)` is exact and checked as such.

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::error::{domain, Result};
use crate::powersum::{t_of, MAX_POWER};
use crate::precision::{alternating_sign, exact_sum, int, ExactRational};
use crate::scalar::{guard_digits_for, Real};

/// Running state of `Σ_{p=0}^{m} (−1)^p x^(2p+1)/(2p+1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesState<R> {
    /// Index `m` of the last term included.
    pub terms_used: u64,
    pub partial_sum: R,
    /// Signed value of term `m`.
    pub last_term: R,
    /// `x^(2m+3)/(2m+3)`, magnitude of the first omitted term.
    pub remainder_bound: R,
    pub x: R,
}

/// Yields successive [`SeriesState`]s for `m = 0, 1, 2, …`.
///
/// Terms are accumulated with a few guard digits; each yielded state is
/// truncated to the caller's context.
pub struct ArctanSeries<R: Real> {
    ctx: R::Context,
    wide: R::Context,
    x: R,
    x_sq: R,
    power: R,
    sum: R,
    m: u64,
}

impl<R: Real> ArctanSeries<R> {
    pub fn new(x: &R, ctx: &R::Context) -> Result<Self> {
        if *x < R::zero() || *x > R::one() {
            return Err(domain("arctan_partial", format!("x = {x} outside [0, 1]")));
        }
        let wide = R::widen(ctx, 8);
        let xw = x.in_context(&wide);
        Ok(Self {
            ctx: ctx.clone(),
            x_sq: xw.clone() * xw.clone(),
            power: xw.clone(),
            x: xw,
            sum: R::zero(),
            m: 0,
            wide,
        })
    }
}

impl<R: Real> Iterator for ArctanSeries<R> {
    type Item = SeriesState<R>;

    fn next(&mut self) -> Option<SeriesState<R>> {
        let m = self.m;
        let magnitude = self.power.clone() / R::from_int(2 * m as i64 + 1, &self.wide);
        let term = if m % 2 == 0 { magnitude } else { -magnitude };
        self.sum = self.sum.clone() + term.clone();
        self.power = self.power.clone() * self.x_sq.clone();
        let next_power = self.power.clone();
        let bound = next_power / R::from_int(2 * m as i64 + 3, &self.wide);
        self.m += 1;
        Some(SeriesState {
            terms_used: m,
            partial_sum: self.sum.in_context(&self.ctx),
            last_term: term.in_context(&self.ctx),
            remainder_bound: bound.in_context(&self.ctx),
            x: self.x.in_context(&self.ctx),
        })
    }
}

/// `Σ_{p=0}^{m} (−1)^p x^(2p+1)/(2p+1)` for `0 ≤ x ≤ 1`; the π/4 series at `x = 1`.
pub fn arctan_partial<R: Real>(x: &R, m: u64, ctx: &R::Context) -> Result<SeriesState<R>> {
    let m_usize = usize::try_from(m).map_err(|_| domain("arctan_partial", "m too large"))?;
    Ok(ArctanSeries::new(x, ctx)?.nth(m_usize).expect("series is unbounded"))
}

/// Exact rational partial sum of the arctan series at rational `x`.
pub fn arctan_partial_exact(x: &ExactRational, m: u64) -> Result<ExactRational> {
    if *x < ExactRational::zero() || *x > ExactRational::one() {
        return Err(domain("arctan_partial_exact", format!("x = {x} outside [0, 1]")));
    }
    let x_sq = x * x;
    let mut power = x.clone();
    let mut terms = Vec::with_capacity(m as usize + 1);
    for p in 0..=m {
        terms.push(alternating_sign(p) * &power / int(2 * p + 1));
        power = &power * &x_sq;
    }
    Ok(exact_sum(terms))
}

/// Splits `1/(1 + q²)` into the first `M` geometric terms and the remainder:
/// `head = Σ_{p<M} (−1)^p q^(2p)`, `tail = q^(2M)/(1 + q²)`, with
/// `head + (−1)^M·tail = 1/(1 + q²)`.
pub fn geometric_truncation(q: &ExactRational, m_terms: u32) -> Result<(ExactRational, ExactRational)> {
    if *q < ExactRational::zero() || *q > ExactRational::one() {
        return Err(domain("geometric_truncation", format!("i/n = {q} outside [0, 1]")));
    }
    if m_terms == 0 {
        return Err(domain("geometric_truncation", "M must be at least 1"));
    }
    let q_sq = q * q;
    let mut power = ExactRational::one();
    let mut head = ExactRational::zero();
    for p in 0..m_terms {
        head += alternating_sign(p.into()) * &power;
        power = &power * &q_sq;
    }
    let tail = power / (ExactRational::one() + q_sq);
    Ok((head, tail))
}

fn check_grid(op: &'static str, n: u64) -> Result<()> {
    if n == 0 {
        return Err(domain(op, "n must be at least 1"));
    }
    Ok(())
}

/// `r(p, n) = (1/n)·Σ_{i<n} (i/n)^(2p) / (1 + (i/n)²)`, never larger than `t(p, n)`.
pub fn r_of(p: u32, n: u64) -> Result<ExactRational> {
    check_grid("r_of", n)?;
    if p > MAX_POWER {
        return Err(domain("r_of", format!("p = {p} exceeds {MAX_POWER}")));
    }
    // (i/n)^(2p)/(1+(i/n)²) = i^(2p) / (n^(2p−2)·(n² + i²)), scaled by 1/n
    let nn = BigInt::from(n) * BigInt::from(n);
    let terms = (0..n).map(|i| {
        let i = BigInt::from(i);
        let num = if p == 0 { BigInt::one() } else { i.clone().pow(2 * p) };
        ExactRational::new(num, &nn + &i * &i)
    });
    let scale = ExactRational::new(BigInt::one(), BigInt::from(n).pow(2 * p)) * &ExactRational::from_integer(BigInt::from(n));
    Ok(exact_sum(terms) * scale)
}

/// `(1/n)·Σ_{i<n} 1/(1 + (i/n)²)`, the upper sandwich sum on the octant.
pub fn arc_sum_direct(n: u64) -> Result<ExactRational> {
    check_grid("arc_sum_direct", n)?;
    let nn = BigInt::from(n) * BigInt::from(n);
    let terms = (0..n).map(|i| {
        let i = BigInt::from(i);
        ExactRational::new(nn.clone(), &nn + &i * &i)
    });
    Ok(exact_sum(terms) / int(n))
}

/// `(Σ_{p<M} (−1)^p t(p,n), r(M,n))`; recombined with sign `(−1)^M` they
/// reproduce [`arc_sum_direct`] exactly.
pub fn decomposed_arc_sum(n: u64, m_terms: u32) -> Result<(ExactRational, ExactRational)> {
    check_grid("decomposed_arc_sum", n)?;
    if m_terms == 0 {
        return Err(domain("decomposed_arc_sum", "M must be at least 1"));
    }
    let head = (0..m_terms)
        .map(|p| Ok(alternating_sign(p.into()) * t_of(p, n)?))
        .collect::<Result<Vec<_>>>()?;
    Ok((exact_sum(head), r_of(m_terms, n)?))
}

/// Smallest `M ≥ 1` with `2/(2M+1) < ε`.
pub fn lemma2_epsilon_to_m<R: Real>(epsilon: &R) -> Result<u64> {
    let eps = epsilon.to_rational();
    if eps <= ExactRational::zero() {
        return Err(domain("epsilon_to_depth", format!("epsilon = {epsilon} must be positive")));
    }
    // 2/(2M+1) < ε  ⇔  M > 1/ε − 1/2
    let threshold = eps.recip() - ExactRational::new(1.into(), 2.into());
    let floor = threshold.floor().to_integer();
    let m = floor + BigInt::one();
    let m = if m < BigInt::one() { BigInt::one() } else { m };
    u64::try_from(m).map_err(|_| domain("epsilon_to_depth", "epsilon too small"))
}

/// π/4 partial sum, `m` terms after the first: convenience wrapper with guard digits sized for `m`.
pub fn pi_series_partial<R: Real>(m: u64, ctx: &R::Context) -> Result<R> {
    let wide = R::widen(ctx, guard_digits_for(m));
    Ok(arctan_partial(&R::one(), m, &wide)?.partial_sum.in_context(ctx))
}
