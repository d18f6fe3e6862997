//! The scalar abstraction every series and quadrature routine is written against.
//!
//! `Real` is implemented for `f32`, `f64` and the decimal fixed-point
//! [`BigReal`]. Values that need a working precision to be constructed
//! (rational constants, square roots, the unit in the last place) go through
//! the associated `Context`: `()` for the hardware floats, a [`Precision`]
//! for `BigReal`.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, ToPrimitive, Zero};

use crate::error::{domain, Result};
use crate::precision::{BigReal, ExactRational, Precision};

pub trait Real:
    Clone
    + Debug
    + Display
    + PartialOrd
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    type Context: Clone + Debug + Send + Sync;

    /// Nearest representable value, truncated toward zero where the type truncates.
    fn from_rational(r: &ExactRational, ctx: &Self::Context) -> Self;

    /// Exact rational value of `self`.
    fn to_rational(&self) -> ExactRational;

    fn to_f64(&self) -> f64;

    fn sqrt(&self) -> Result<Self>;

    /// Spacing of representable values near 1 in `ctx`.
    fn ulp(ctx: &Self::Context) -> Self;

    /// `ctx` with `extra` guard digits (a no-op for fixed-width floats).
    fn widen(ctx: &Self::Context, extra: u32) -> Self::Context;

    /// Re-expresses `self` in `ctx`, dropping guard digits.
    fn in_context(&self, ctx: &Self::Context) -> Self;

    fn from_ratio(num: i64, den: i64, ctx: &Self::Context) -> Result<Self> {
        if den == 0 {
            return Err(crate::Error::DivisionByZero);
        }
        Ok(Self::from_rational(&ExactRational::new(num.into(), den.into()), ctx))
    }

    fn from_int(n: i64, ctx: &Self::Context) -> Self {
        Self::from_rational(&ExactRational::from_integer(n.into()), ctx)
    }

    fn abs(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn powi(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl Real for BigReal {
    type Context = Precision;

    fn from_rational(r: &ExactRational, ctx: &Precision) -> Self {
        BigReal::from_rational(r, *ctx)
    }

    fn to_rational(&self) -> ExactRational {
        BigReal::to_rational(self)
    }

    fn to_f64(&self) -> f64 {
        BigReal::to_f64(self)
    }

    fn sqrt(&self) -> Result<Self> {
        BigReal::sqrt(self)
    }

    fn ulp(ctx: &Precision) -> Self {
        BigReal::ulp(*ctx)
    }

    fn widen(ctx: &Precision, extra: u32) -> Precision {
        ctx.widen(extra)
    }

    fn in_context(&self, ctx: &Precision) -> Self {
        self.rescale(ctx.digits)
    }

    fn abs(&self) -> Self {
        BigReal::abs(self)
    }

    fn powi(&self, exp: u32) -> Self {
        BigReal::powi(self, exp)
    }
}

macro_rules! impl_real_float {
    ($t:ty, $to:ident, $from:ident) => {
        impl Real for $t {
            type Context = ();

            fn from_rational(r: &ExactRational, _: &()) -> Self {
                r.$to().unwrap_or(<$t>::NAN)
            }

            fn to_rational(&self) -> ExactRational {
                BigRational::$from(*self).unwrap_or_else(|| BigRational::from_integer(BigInt::zero()))
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }

            fn sqrt(&self) -> Result<Self> {
                if *self < 0.0 {
                    return Err(domain("sqrt", format!("negative input {self}")));
                }
                Ok(<$t>::sqrt(*self))
            }

            fn ulp(_: &()) -> Self {
                <$t>::EPSILON
            }

            fn widen(_: &(), _: u32) {}

            fn in_context(&self, _: &()) -> Self {
                *self
            }

            fn abs(&self) -> Self {
                <$t>::abs(*self)
            }

            fn powi(&self, exp: u32) -> Self {
                <$t>::powi(*self, exp as i32)
            }
        }
    };
}

impl_real_float!(f64, to_f64, from_f64);
impl_real_float!(f32, to_f32, from_f32);

/// Number of decimal digits needed to write `n`, used to size guard digits
/// for sums of `n` truncated terms.
pub(crate) fn guard_digits_for(n: u64) -> u32 {
    n.max(1).ilog10() + 1 + 5
}
