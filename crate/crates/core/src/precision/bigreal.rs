//! Decimal fixed-point reals backed by an arbitrary-size integer mantissa.
//!
//! A value is `mantissa / 10^scale`. Operands with different scales are
//! aligned to the larger scale first, so constants built at scale 0
//! (`zero()`, `one()`) mix freely with context values. Multiplication,
//! division and square root truncate toward zero at the result scale.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ExactRational;
use crate::error::{domain, Error, Result};

/// Default number of decimal digits after the point.
pub const DEFAULT_DIGITS: u32 = 50;

thread_local! {
    static POW10: RefCell<Vec<BigInt>> = RefCell::new(vec![BigInt::one()]);
}

/// `10^exp`, memoised per thread.
pub(crate) fn pow10(exp: u32) -> BigInt {
    POW10.with(|cache| {
        let mut cache = cache.borrow_mut();
        while cache.len() <= exp as usize {
            let next = cache.last().unwrap() * 10u32;
            cache.push(next);
        }
        cache[exp as usize].clone()
    })
}

/// Working precision for [`BigReal`]: digits kept after the decimal point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Precision {
    pub digits: u32,
}

impl Precision {
    pub const fn new(digits: u32) -> Self {
        Self { digits }
    }

    /// The same context with `extra` guard digits.
    pub const fn widen(self, extra: u32) -> Self {
        Self {
            digits: self.digits + extra,
        }
    }
}

impl Default for Precision {
    fn default() -> Self {
        Self::new(DEFAULT_DIGITS)
    }
}

#[derive(Clone)]
pub struct BigReal {
    mantissa: BigInt,
    scale: u32,
}

impl BigReal {
    pub fn from_parts(mantissa: BigInt, scale: u32) -> Self {
        Self { mantissa, scale }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn from_int(n: impl Into<BigInt>, ctx: Precision) -> Self {
        Self {
            mantissa: n.into() * pow10(ctx.digits),
            scale: ctx.digits,
        }
    }

    /// `num / den` truncated toward zero at `ctx.digits`.
    pub fn from_ratio(num: impl Into<BigInt>, den: impl Into<BigInt>, ctx: Precision) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self {
            mantissa: num.into() * pow10(ctx.digits) / den,
            scale: ctx.digits,
        })
    }

    pub fn from_rational(r: &ExactRational, ctx: Precision) -> Self {
        Self {
            mantissa: r.numer() * pow10(ctx.digits) / r.denom(),
            scale: ctx.digits,
        }
    }

    /// The exact rational value `mantissa / 10^scale`.
    pub fn to_rational(&self) -> ExactRational {
        ExactRational::new(self.mantissa.clone(), pow10(self.scale))
    }

    /// Unit in the last place at `ctx`.
    pub fn ulp(ctx: Precision) -> Self {
        Self {
            mantissa: BigInt::one(),
            scale: ctx.digits,
        }
    }

    /// Re-expresses the value at `scale` digits, truncating toward zero when narrowing.
    pub fn rescale(&self, scale: u32) -> Self {
        let mantissa = match scale.cmp(&self.scale) {
            Ordering::Equal => self.mantissa.clone(),
            Ordering::Greater => &self.mantissa * pow10(scale - self.scale),
            Ordering::Less => &self.mantissa / pow10(self.scale - scale),
        };
        Self { mantissa, scale }
    }

    fn aligned(&self, other: &Self) -> (BigInt, BigInt, u32) {
        match self.scale.cmp(&other.scale) {
            Ordering::Equal => (self.mantissa.clone(), other.mantissa.clone(), self.scale),
            Ordering::Greater => (
                self.mantissa.clone(),
                &other.mantissa * pow10(self.scale - other.scale),
                self.scale,
            ),
            Ordering::Less => (
                &self.mantissa * pow10(other.scale - self.scale),
                other.mantissa.clone(),
                other.scale,
            ),
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.mantissa.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (a, b, scale) = self.aligned(rhs);
        Ok(Self {
            mantissa: a * pow10(scale) / b,
            scale,
        })
    }

    /// Square root truncated at the value's own scale: the result `y`
    /// satisfies `y² ≤ x < (y + ulp)²`.
    pub fn sqrt(&self) -> Result<Self> {
        if self.mantissa.is_negative() {
            return Err(domain("sqrt", format!("negative input {self}")));
        }
        Ok(Self {
            mantissa: (&self.mantissa * pow10(self.scale)).sqrt(),
            scale: self.scale,
        })
    }

    pub fn abs(&self) -> Self {
        Self {
            mantissa: self.mantissa.abs(),
            scale: self.scale,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn powi(&self, exp: u32) -> Self {
        let mut acc = Self::one().rescale(self.scale);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        // Through the decimal string so large scales do not overflow an f64 intermediate.
        self.to_string().parse().unwrap_or(f64::NAN)
    }

    /// Parses a plain decimal literal, truncating (or zero-padding) to `ctx.digits`.
    pub fn from_decimal_str(s: &str, ctx: Precision) -> Result<Self> {
        Ok(s.parse::<Self>()?.rescale(ctx.digits))
    }
}

impl FromStr for BigReal {
    type Err = Error;

    /// Parses `[-+]digits[.digits]`; the scale is the number of fractional digits given.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse(s.to_string());
        let t = s.trim();
        let (negative, body) = match t.as_bytes().first() {
            Some(b'-') => (true, &t[1..]),
            Some(b'+') => (false, &t[1..]),
            _ => (false, t),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(err());
        }
        if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let digits = format!("{int_part}{frac_part}");
        let mut mantissa = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits.parse::<BigInt>().map_err(|_| err())?
        };
        if negative {
            mantissa = -mantissa;
        }
        let scale = u32::try_from(frac_part.len()).map_err(|_| err())?;
        Ok(Self { mantissa, scale })
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (int_part, frac_part) = self.mantissa.abs().div_rem(&pow10(self.scale));
        let sign = if self.mantissa.sign() == Sign::Minus { "-" } else { "" };
        if self.scale == 0 {
            write!(f, "{sign}{int_part}")
        } else {
            write!(
                f,
                "{sign}{int_part}.{frac:0>width$}",
                frac = frac_part.to_string(),
                width = self.scale as usize
            )
        }
    }
}

impl fmt::Debug for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigReal({self})")
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for BigReal {}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigReal {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.scale == other.scale {
            return self.mantissa.cmp(&other.mantissa);
        }
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl Zero for BigReal {
    fn zero() -> Self {
        Self {
            mantissa: BigInt::zero(),
            scale: 0,
        }
    }

    fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }
}

impl One for BigReal {
    fn one() -> Self {
        Self {
            mantissa: BigInt::one(),
            scale: 0,
        }
    }
}

impl ToPrimitive for BigReal {
    fn to_i64(&self) -> Option<i64> {
        (&self.mantissa / pow10(self.scale)).to_i64()
    }

    fn to_u64(&self) -> Option<u64> {
        (&self.mantissa / pow10(self.scale)).to_u64()
    }

    fn to_f64(&self) -> Option<f64> {
        Some(BigReal::to_f64(self))
    }
}

impl<'a> Add<&'a BigReal> for &'a BigReal {
    type Output = BigReal;

    fn add(self, rhs: &'a BigReal) -> BigReal {
        if self.scale == rhs.scale {
            return BigReal {
                mantissa: &self.mantissa + &rhs.mantissa,
                scale: self.scale,
            };
        }
        let (a, b, scale) = self.aligned(rhs);
        BigReal {
            mantissa: a + b,
            scale,
        }
    }
}

impl<'a> Sub<&'a BigReal> for &'a BigReal {
    type Output = BigReal;

    fn sub(self, rhs: &'a BigReal) -> BigReal {
        if self.scale == rhs.scale {
            return BigReal {
                mantissa: &self.mantissa - &rhs.mantissa,
                scale: self.scale,
            };
        }
        let (a, b, scale) = self.aligned(rhs);
        BigReal {
            mantissa: a - b,
            scale,
        }
    }
}

impl<'a> Mul<&'a BigReal> for &'a BigReal {
    type Output = BigReal;

    fn mul(self, rhs: &'a BigReal) -> BigReal {
        // Exact product has scale self.scale + rhs.scale; drop down to the larger one.
        let scale = self.scale.max(rhs.scale);
        let drop = self.scale + rhs.scale - scale;
        BigReal {
            mantissa: (&self.mantissa * &rhs.mantissa) / pow10(drop),
            scale,
        }
    }
}

impl<'a> Div<&'a BigReal> for &'a BigReal {
    type Output = BigReal;

    /// Panics on a zero divisor, like integer division; see [`BigReal::checked_div`].
    fn div(self, rhs: &'a BigReal) -> BigReal {
        self.checked_div(rhs).expect("BigReal division by zero")
    }
}

macro_rules! forward_owned_binop {
    ($($imp:ident $method:ident),*) => {$(
        impl $imp<BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $imp<&'a BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &'a BigReal) -> BigReal {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add add, Sub sub, Mul mul, Div div);

impl Neg for BigReal {
    type Output = BigReal;

    fn neg(self) -> BigReal {
        BigReal {
            mantissa: -self.mantissa,
            scale: self.scale,
        }
    }
}

impl Neg for &BigReal {
    type Output = BigReal;

    fn neg(self) -> BigReal {
        BigReal {
            mantissa: -&self.mantissa,
            scale: self.scale,
        }
    }
}

impl std::iter::Sum for BigReal {
    fn sum<I: Iterator<Item = BigReal>>(iter: I) -> Self {
        iter.fold(BigReal::zero(), |acc, x| &acc + &x)
    }
}
