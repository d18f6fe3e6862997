//! Sine and versine by iterative refinement, and the chord-sum arc length.
//!
//! An arc `s` is cut into `n` equal bits with `B_j = sin(j·s/n)`. The
//! second difference of sines gives
//! `B_n = n·B_1 − α²·[(B_1 + … + B_{n−1}) + (B_1 + … + B_{n−2}) + … + B_1]`
//! with `α = 2·sin(s/(2n))`. Substituting an estimate of the bits on the
//! right refines the estimate on the left. In the large-n limit one pass
//! maps the monomial `s^d` to `s^(d+2)/((d+1)(d+2))`, which is what
//! [`SineRefinement::refine`] iterates.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Error, Result};
use crate::powersum::repeated_sum;
use crate::precision::{cos_reference, int, rat, sin_reference, ExactRational};
use crate::scalar::{guard_digits_for, Real};

/// Largest refinement count accepted by [`sine_estimate`] and [`versine_estimate`].
pub const MAX_ITERATIONS: u32 = 1000;

fn check_iterations(op: &'static str, k: u32) -> Result<()> {
    if k > MAX_ITERATIONS {
        return Err(domain(op, format!("{k} iterations exceeds {MAX_ITERATIONS}")));
    }
    Ok(())
}

/// Rational just above π/2, used for argument-range checks.
fn quarter_turn_ceiling() -> ExactRational {
    rat(15_707_963_268u64, 10_000_000_000u64)
}

fn check_angle<R: Real>(op: &'static str, s: &R, allow_zero: bool) -> Result<()> {
    let r = s.to_rational();
    let low_ok = if allow_zero { r >= ExactRational::zero() } else { r > ExactRational::zero() };
    if !low_ok || r > quarter_turn_ceiling() {
        return Err(domain(op, format!("angle {s} outside the quarter turn")));
    }
    Ok(())
}

/// `[sin((j+1)h) − 2 sin(jh) + sin((j−1)h)] + α²·sin(jh)` with `h = s/n`;
/// zero up to rounding.
pub fn second_difference_residual<R: Real>(s: &R, n: u64, j: u64, ctx: &R::Context) -> Result<R> {
    check_angle("second_difference_residual", s, false)?;
    if n < 2 {
        return Err(domain("second_difference_residual", format!("n = {n} < 2")));
    }
    if j == 0 || j >= n {
        return Err(Error::IndexOutOfRange {
            op: "second_difference_residual",
            index: j,
            bound: n,
        });
    }
    let wide = R::widen(ctx, 6);
    let h = s.in_context(&wide) / R::from_int(n as i64, &wide);
    let at = |k: u64| sin_reference(&(h.clone() * R::from_int(k as i64, &wide)), &wide);
    let alpha = R::from_int(2, &wide) * sin_reference(&(h.clone() / R::from_int(2, &wide)), &wide)?;
    let mid = at(j)?;
    let diff = at(j + 1)? - R::from_int(2, &wide) * mid.clone() + at(j - 1)?;
    Ok((diff + alpha.clone() * alpha * mid).in_context(ctx))
}

/// `B_n − (n·B_1 − α²·Σ_{m=1}^{n−1} Σ_{k=1}^{m} B_k)` with the bits taken from
/// the reference sine; zero up to rounding.
pub fn recursion_residual<R: Real>(s: &R, n: u64, ctx: &R::Context) -> Result<R> {
    check_angle("recursion_residual", s, false)?;
    if n < 2 {
        return Err(domain("recursion_residual", format!("n = {n} < 2")));
    }
    let wide = R::widen(ctx, guard_digits_for(n * n));
    let h = s.in_context(&wide) / R::from_int(n as i64, &wide);
    let bits = (1..=n)
        .map(|k| sin_reference(&(h.clone() * R::from_int(k as i64, &wide)), &wide))
        .collect::<Result<Vec<R>>>()?;
    let alpha = R::from_int(2, &wide) * sin_reference(&(h / R::from_int(2, &wide)), &wide)?;
    let mut running = R::zero();
    let mut nested = R::zero();
    for b in &bits[..(n - 1) as usize] {
        running = running + b.clone();
        nested = nested + running.clone();
    }
    let rhs = R::from_int(n as i64, &wide) * bits[0].clone() - alpha.clone() * alpha * nested;
    Ok((bits[(n - 1) as usize].clone() - rhs).in_context(ctx))
}

/// One refinement pass from the straight-line bits `B_j = j·s/n`:
/// `s − (s/n)³·Σ_{k=1}^{n−1} S_k^1`, with `α` replaced by `s/n`.
///
/// Tends to `s − s³/6` as `n` grows; the gap is exactly `s³/(6n²)`.
pub fn discrete_sine_once<R: Real>(s: &R, n: u64, ctx: &R::Context) -> Result<R> {
    check_angle("discrete_sine_once", s, false)?;
    let nested = repeated_sum(n)?;
    let wide = R::widen(ctx, 6);
    let step = s.in_context(&wide) / R::from_int(n as i64, &wide);
    let correction = step.clone() * step.clone() * step * R::from_rational(&nested, &wide);
    Ok((s.in_context(&wide) - correction).in_context(ctx))
}

/// Polynomial estimate `P_k(s) = Σ_j c_j s^(2j+1)` after `k` refinement passes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SineRefinement {
    pub iteration: u32,
    /// `coefficients[j]` multiplies `s^(2j+1)`.
    pub coefficients: Vec<ExactRational>,
}

impl Default for SineRefinement {
    fn default() -> Self {
        Self::new()
    }
}

impl SineRefinement {
    /// `P_0(s) = s`.
    pub fn new() -> Self {
        Self {
            iteration: 0,
            coefficients: vec![ExactRational::one()],
        }
    }

    /// The result of `iterations` passes of [`refine`](Self::refine). Every
    /// pass keeps the leading coefficients, so they are built once in order.
    pub fn after(iterations: u32) -> Self {
        let mut coefficients = Vec::with_capacity(iterations as usize + 1);
        coefficients.push(ExactRational::one());
        let mut den = BigInt::one();
        for j in 0..iterations as u64 {
            den *= (2 * j + 2) * (2 * j + 3);
            coefficients.push(unit_fraction(j % 2 == 0, den.clone()));
        }
        Self {
            iteration: iterations,
            coefficients,
        }
    }

    /// `P ↦ s − D(P)` where `D(s^d) = s^(d+2)/((d+1)(d+2))`.
    pub fn refine(&self) -> Self {
        let mut next = Vec::with_capacity(self.coefficients.len() + 1);
        next.push(ExactRational::one());
        for (j, c) in self.coefficients.iter().enumerate() {
            let d = 2 * j as u64 + 1;
            next.push(-c / int((d + 1) * (d + 2)));
        }
        Self {
            iteration: self.iteration + 1,
            coefficients: next,
        }
    }

    pub fn degree(&self) -> usize {
        2 * self.coefficients.len() - 1
    }

    /// Evaluates the polynomial by Horner's rule in `s²`.
    pub fn evaluate<R: Real>(&self, s: &R, ctx: &R::Context) -> R {
        let wide = R::widen(ctx, 4);
        let x = s.in_context(&wide);
        let x2 = x.clone() * x.clone();
        let acc = self
            .coefficients
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * x2.clone() + R::from_rational(c, &wide));
        (acc * x).in_context(ctx)
    }

    /// Versine polynomial built from this sine estimate by one more summation
    /// of the bits, `s^(2j+1) ↦ s^(2j+2)/(2j+2)`: coefficient `j` multiplies `s^(2j+2)`.
    pub fn versine_coefficients(&self) -> Vec<ExactRational> {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(j, c)| {
                if c.numer().magnitude().is_one() {
                    unit_fraction(c.numer().is_negative(), c.denom() * (2 * j as u64 + 2))
                } else {
                    c / int(2 * j as u64 + 2)
                }
            })
            .collect()
    }
}

/// `±1/den`, built without a gcd pass: reducing against a numerator of 1 costs
/// time quadratic in the size of `den` in the big-integer gcd.
fn unit_fraction(negative: bool, den: BigInt) -> ExactRational {
    let num = if negative { -BigInt::one() } else { BigInt::one() };
    ExactRational::new_raw(num, den)
}

fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `(−1)^j/(2j+1)!`, the sine series coefficient.
pub fn sine_series_coefficient(j: u32) -> ExactRational {
    unit_fraction(j % 2 == 1, factorial(2 * j as u64 + 1))
}

/// `P_k(s)` for `0 ≤ s ≤ π/2`.
pub fn sine_estimate<R: Real>(s: &R, iterations: u32, ctx: &R::Context) -> Result<R> {
    check_angle("sine_estimate", s, true)?;
    check_iterations("sine_estimate", iterations)?;
    Ok(SineRefinement::after(iterations).evaluate(s, ctx))
}

/// The `k`-term versine polynomial `Σ_{j=1}^{k} (−1)^(j+1) s^(2j)/(2j)!`.
///
/// Reconstructed from the sine refinement; `k = 0` gives 0.
pub fn versine_estimate<R: Real>(s: &R, iterations: u32, ctx: &R::Context) -> Result<R> {
    check_angle("versine_estimate", s, true)?;
    check_iterations("versine_estimate", iterations)?;
    if iterations == 0 {
        return Ok(R::zero());
    }
    let coeffs = SineRefinement::after(iterations - 1).versine_coefficients();
    let wide = R::widen(ctx, 4);
    let x = s.in_context(&wide);
    let x2 = x.clone() * x.clone();
    let acc = coeffs
        .iter()
        .rev()
        .fold(R::zero(), |acc, c| acc * x2.clone() + R::from_rational(c, &wide));
    Ok((acc * x2).in_context(ctx))
}

/// `s^e / e!`, the alternating-series remainder bound used for both estimates.
pub fn taylor_remainder<R: Real>(s: &R, exponent: u32, ctx: &R::Context) -> R {
    let wide = R::widen(ctx, 4);
    let inv = R::from_rational(&unit_fraction(false, factorial(exponent as u64)), &wide);
    (s.in_context(&wide).powi(exponent) * inv).in_context(ctx)
}

/// Sum of `n` equal chords over an arc `x`: `L_n = 2n·sin(x/(2n))`.
pub fn chord_sum<R: Real>(x: &R, n: u64, ctx: &R::Context) -> Result<R> {
    check_angle("chord_sum", x, false)?;
    if n == 0 {
        return Err(domain("chord_sum", "n must be at least 1"));
    }
    let wide = R::widen(ctx, 6);
    let two_n = R::from_int(2 * n as i64, &wide);
    let half_chord = sin_reference(&(x.in_context(&wide) / two_n.clone()), &wide)?;
    Ok((two_n * half_chord).in_context(ctx))
}

/// Bound `1.1·x³/(24n²)` on `|L_n − x|`, valid for `n ≥ 10`.
pub fn chord_sum_bound<R: Real>(x: &R, n: u64, ctx: &R::Context) -> R {
    let wide = R::widen(ctx, 4);
    let x3 = x.in_context(&wide).powi(3);
    let den = 24 * 10 * n as i64 * n as i64;
    (x3 * R::from_ratio(11, den, &wide).unwrap()).in_context(ctx)
}

/// `1 − cos(s)` from the reference cosine.
pub fn versine_reference<R: Real>(s: &R, ctx: &R::Context) -> Result<R> {
    let wide = R::widen(ctx, 4);
    Ok((R::one() - cos_reference(s, &wide)?).in_context(ctx))
}
