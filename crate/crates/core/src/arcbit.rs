//! Arc-bit summation over an equally divided tangent.
//!
//! The tangent segment of length `x_max` at E is cut into `n` equal parts
//! with end points A_i. The hypotenuse ("karna") O A_i has squared length
//! `k_i² = 1 + (i·x_max/n)²`, and the half-chord dropped from the arc point
//! C_i onto O A_{i+1} is `b_i = (x_max/n) / (k_i·k_{i+1})`. Summing the
//! `b_i` approximates the arc `arctan(x_max)`, which is π/4 for `x_max = 1`.
//!
//! Squared karnas are kept as exact rationals; the only square root taken is
//! the one inside [`arc_bit`], so [`sandwich_bounds`] is exact.

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::precision::{arctan_reference, exact_sum, int, ExactRational};
use crate::scalar::{guard_digits_for, Real};

/// The tangent subdivision: `n` equal parts of a tangent of length `x_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcBitGrid {
    n: u64,
    x_max: ExactRational,
}

impl ArcBitGrid {
    /// A grid over `[0, x_max]`; `x_max = 0` is accepted as the degenerate
    /// zero-length tangent.
    pub fn new(n: u64, x_max: ExactRational) -> Result<Self> {
        if n == 0 {
            return Err(domain("ArcBitGrid::new", "n must be at least 1"));
        }
        if x_max < ExactRational::zero() || x_max > ExactRational::one() {
            return Err(domain("ArcBitGrid::new", format!("x_max = {x_max} outside [0, 1]")));
        }
        Ok(Self { n, x_max })
    }

    /// The octant grid, `x_max = 1`.
    pub fn octant(n: u64) -> Result<Self> {
        Self::new(n, ExactRational::one())
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn x_max(&self) -> &ExactRational {
        &self.x_max
    }

    /// Length of one tangent subdivision, `x_max / n`.
    pub fn step(&self) -> ExactRational {
        &self.x_max / int(self.n)
    }

    /// Distance of A_i from E.
    pub fn point(&self, i: u64) -> Result<ExactRational> {
        if i > self.n {
            return Err(Error::IndexOutOfRange {
                op: "ArcBitGrid::point",
                index: i,
                bound: self.n + 1,
            });
        }
        Ok(self.step() * int(i))
    }
}

/// Actual chord-versus-arc gap next to its certified bound.
#[derive(Debug, Clone, PartialEq)]
pub struct GapReport<R> {
    pub n: u64,
    /// `Σ (c_i − b_i)`.
    pub d_n: R,
    /// `1/√(1 − 1/n²) − 1`.
    pub bound: R,
    /// `Σ c_i`, which must reproduce `arctan(x_max)`.
    pub arc_sum: R,
}

/// Squared karna `k_i² = 1 + (i·x_max/n)²`, exact.
pub fn karna_sq(i: u64, grid: &ArcBitGrid) -> Result<ExactRational> {
    let a = grid.point(i).map_err(|_| Error::IndexOutOfRange {
        op: "karna_sq",
        index: i,
        bound: grid.n + 1,
    })?;
    Ok(ExactRational::one() + &a * &a)
}

/// Half-chord approximation `b_i` of the i-th arc bit.
pub fn arc_bit<R: Real>(i: u64, grid: &ArcBitGrid, ctx: &R::Context) -> Result<R> {
    if i >= grid.n {
        return Err(Error::IndexOutOfRange {
            op: "arc_bit",
            index: i,
            bound: grid.n,
        });
    }
    let product = karna_sq(i, grid)? * karna_sq(i + 1, grid)?;
    let step = R::from_rational(&grid.step(), ctx);
    Ok(step / R::from_rational(&product, ctx).sqrt()?)
}

fn arc_bits_wide<R: Real>(grid: &ArcBitGrid, wide: &R::Context) -> Result<Vec<R>> {
    (0..grid.n)
        .into_par_iter()
        .map(|i| arc_bit::<R>(i, grid, wide))
        .collect()
}

/// `Σ_{i<n} b_i`, accumulated with guard digits and reduced in index order.
pub fn arc_bit_sum<R: Real>(grid: &ArcBitGrid, ctx: &R::Context) -> Result<R> {
    if grid.x_max.is_zero() {
        return Ok(R::zero());
    }
    let wide = R::widen(ctx, guard_digits_for(grid.n));
    let bits = arc_bits_wide::<R>(grid, &wide)?;
    let total = bits.into_iter().fold(R::zero(), |acc, b| acc + b);
    Ok(total.in_context(ctx))
}

/// Exact lower and upper sums `(x/n)·Σ 1/k²_{i+1}` and `(x/n)·Σ 1/k²_i`
/// that bracket [`arc_bit_sum`]. For `x_max = 1` they differ by exactly `1/(2n)`.
pub fn sandwich_bounds(grid: &ArcBitGrid) -> Result<(ExactRational, ExactRational)> {
    let inverse_karnas: Vec<ExactRational> = (0..=grid.n)
        .map(|i| karna_sq(i, grid).map(|k| k.recip()))
        .collect::<Result<_>>()?;
    let step = grid.step();
    let n = grid.n as usize;
    let lower = &step * exact_sum(inverse_karnas[1..=n].iter().cloned());
    let upper = &step * exact_sum(inverse_karnas[..n].iter().cloned());
    Ok((lower, upper))
}

/// Upper bound `1/√(1 − 1/n²) − 1` on the chord-versus-arc gap, taking the
/// largest karna factor `λ = 1/(k_i k_{i+1})` to be 1.
pub fn gap_bound<R: Real>(n: u64, ctx: &R::Context) -> Result<R> {
    if n < 2 {
        return Err(domain("gap_bound", format!("n = {n}: bound is degenerate below 2")));
    }
    let wide = R::widen(ctx, 6);
    let n = ExactRational::from_integer(n.into());
    let inner = ExactRational::one() - (&n * &n).recip();
    let root = R::from_rational(&inner, &wide).sqrt()?;
    Ok((R::one() / root - R::one()).in_context(ctx))
}

/// Measures `d(n) = Σ (c_i − b_i)`, where `c_i = arctan(b_i / √(1 − b_i²))`
/// is the true arc bit evaluated through the reference arctan.
pub fn measure_gap<R: Real>(grid: &ArcBitGrid, ctx: &R::Context) -> Result<GapReport<R>> {
    let bound = gap_bound::<R>(grid.n, ctx)?;
    let wide = R::widen(ctx, guard_digits_for(grid.n));
    let pairs: Vec<(R, R)> = (0..grid.n)
        .into_par_iter()
        .map(|i| {
            let b = arc_bit::<R>(i, grid, &wide)?;
            let oq = (R::one() - b.clone() * b.clone()).sqrt()?;
            let c = arctan_reference(&(b.clone() / oq), &wide)?;
            Ok((b, c))
        })
        .collect::<Result<_>>()?;
    let (mut d, mut arc) = (R::zero(), R::zero());
    for (b, c) in pairs {
        d = d + (c.clone() - b);
        arc = arc + c;
    }
    Ok(GapReport {
        n: grid.n,
        d_n: d.in_context(ctx),
        bound,
        arc_sum: arc.in_context(ctx),
    })
}

/// Arc bit computed as the angle difference `atan((i+1)x/n) − atan(i·x/n)`;
/// mathematically equal to the `c_i` used by [`measure_gap`].
pub fn arc_bit_by_angle_difference<R: Real>(i: u64, grid: &ArcBitGrid, ctx: &R::Context) -> Result<R> {
    if i >= grid.n {
        return Err(Error::IndexOutOfRange {
            op: "arc_bit_by_angle_difference",
            index: i,
            bound: grid.n,
        });
    }
    let hi = R::from_rational(&grid.point(i + 1)?, ctx);
    let lo = R::from_rational(&grid.point(i)?, ctx);
    Ok(arctan_reference(&hi, ctx)? - arctan_reference(&lo, ctx)?)
}
