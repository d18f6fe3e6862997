//! The tangent-intercept transmutation of the circle and a quadrature oracle.
//!
//! For `y = √(2x − x²)` the intercept `z = y − x·dy/dx` reduces to `x/y`, so
//! `y = z(2 − x)` and `x = 2z²/(1 + z²)`. The sector area then becomes
//! `z − ∫_0^z t²/(1+t²) dt = arctan z`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::precision::{arctan_reference, int, ExactRational};
use crate::scalar::{guard_digits_for, Real};

/// Panels summed sequentially inside one parallel work item.
const CHUNK: u64 = 4096;

/// Largest exponent accepted for the monomial integrands.
pub const MAX_EXPONENT: u32 = 64;

/// The closed set of integrands the quadrature accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Integrand {
    /// `1/(1+t²)`
    Reciprocal,
    /// `t²/(1+t²)`
    SquareRatio,
    /// `t^k`
    Monomial(u32),
    /// `t^k/(1+t²)`
    PowerRatio(u32),
}

impl Integrand {
    fn check(self) -> Result<Self> {
        match self {
            Integrand::Monomial(k) | Integrand::PowerRatio(k) if k > MAX_EXPONENT => Err(domain(
                "integrand",
                format!("exponent {k} exceeds {MAX_EXPONENT}"),
            )),
            _ => Ok(self),
        }
    }

    pub fn eval<R: Real>(self, t: &R, ctx: &R::Context) -> R {
        let one_plus = || R::one() + t.clone() * t.clone();
        match self {
            Integrand::Reciprocal => R::one().in_context(ctx) / one_plus(),
            Integrand::SquareRatio => (t.clone() * t.clone()).in_context(ctx) / one_plus(),
            Integrand::Monomial(k) => t.powi(k).in_context(ctx),
            Integrand::PowerRatio(k) => t.powi(k).in_context(ctx) / one_plus(),
        }
    }

    /// Bound on `|f''|` over `[lower, upper]`, when one is known.
    ///
    /// `1/(1+t²)` and `t²/(1+t²)` have `|f''| ≤ 2` everywhere; `t^k` has
    /// `k(k−1)c^(k−2)` with `c = max(|lower|, |upper|)`; `t^k/(1+t²)` has
    /// `k² + k + 2` on `[−1, 1]` and no bound is given outside it.
    pub fn second_derivative_bound(self, lower: &ExactRational, upper: &ExactRational) -> Option<ExactRational> {
        let c = lower.abs_max(upper);
        match self {
            Integrand::Reciprocal | Integrand::SquareRatio => Some(int(2)),
            Integrand::Monomial(k) if k < 2 => Some(int(0)),
            Integrand::Monomial(k) => Some(int(k as u64 * (k as u64 - 1)) * pow_rat(&c, k - 2)),
            Integrand::PowerRatio(k) => {
                (c <= int(1)).then(|| int(k as u64 * k as u64 + k as u64 + 2))
            }
        }
    }

    /// `∫_lower^upper f`, where a closed form is available.
    ///
    /// `t^k/(1+t²)` reduces to `±arctan` for even `k`; odd `k` needs a logarithm
    /// and returns `None`.
    pub fn exact_integral<R: Real>(self, lower: &R, upper: &R, ctx: &R::Context) -> Result<Option<R>> {
        let wide = R::widen(ctx, 4);
        let (a, b) = (lower.in_context(&wide), upper.in_context(&wide));
        let atan = || -> Result<R> {
            Ok(arctan_reference(&b, &wide)? - arctan_reference(&a, &wide)?)
        };
        let value = match self {
            Integrand::Reciprocal => atan()?,
            Integrand::SquareRatio => b.clone() - a.clone() - atan()?,
            Integrand::Monomial(k) => {
                let (ra, rb) = (a.to_rational(), b.to_rational());
                let v = (pow_rat(&rb, k + 1) - pow_rat(&ra, k + 1)) / int(k as u64 + 1);
                R::from_rational(&v, &wide)
            }
            Integrand::PowerRatio(k) if k % 2 == 1 => return Ok(None),
            Integrand::PowerRatio(k) => {
                // t^(2j)/(1+t²) = Σ_{i<j} (−1)^(j−1−i) t^(2i) + (−1)^j/(1+t²)
                let j = k / 2;
                let (ra, rb) = (a.to_rational(), b.to_rational());
                let mut poly = ExactRational::from_integer(BigInt::from(0));
                for i in 0..j {
                    let d = 2 * i + 1;
                    let term = (pow_rat(&rb, d) - pow_rat(&ra, d)) / int(d as u64);
                    if (j - 1 - i) % 2 == 0 {
                        poly += term;
                    } else {
                        poly -= term;
                    }
                }
                let tail = atan()?;
                let poly = R::from_rational(&poly, &wide);
                if j % 2 == 0 {
                    poly + tail
                } else {
                    poly - tail
                }
            }
        };
        Ok(Some(value.in_context(ctx)))
    }
}

fn pow_rat(x: &ExactRational, e: u32) -> ExactRational {
    num_traits::Pow::pow(x, e)
}

trait AbsMax {
    fn abs_max(&self, other: &Self) -> Self;
}

impl AbsMax for ExactRational {
    fn abs_max(&self, other: &Self) -> Self {
        use num_traits::Signed;
        let (a, b) = (self.abs(), other.abs());
        if a > b {
            a
        } else {
            b
        }
    }
}

impl fmt::Display for Integrand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Integrand::Reciprocal => write!(f, "1/(1+t^2)"),
            Integrand::SquareRatio => write!(f, "t^2/(1+t^2)"),
            Integrand::Monomial(k) => write!(f, "t^{k}"),
            Integrand::PowerRatio(k) => write!(f, "t^{k}/(1+t^2)"),
        }
    }
}

impl FromStr for Integrand {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::Unknown {
            kind: "integrand",
            name: s.to_string(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let parsed = match compact.as_str() {
            "reciprocal" | "1/(1+t^2)" => Integrand::Reciprocal,
            "square-ratio" | "t^2/(1+t^2)" => Integrand::SquareRatio,
            other => {
                let rest = other.strip_prefix("t^").ok_or_else(unknown)?;
                match rest.split_once('/') {
                    None => Integrand::Monomial(rest.parse().map_err(|_| unknown())?),
                    Some((k, "(1+t^2)")) => Integrand::PowerRatio(k.parse().map_err(|_| unknown())?),
                    Some(_) => return Err(unknown()),
                }
            }
        };
        parsed.check()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Scheme {
    Midpoint,
    #[default]
    Trapezoid,
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "midpoint" => Ok(Scheme::Midpoint),
            "trapezoid" => Ok(Scheme::Trapezoid),
            _ => Err(Error::Unknown {
                kind: "scheme",
                name: s.to_string(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureSpec<R> {
    pub lower: R,
    pub upper: R,
    pub panels: u64,
    pub scheme: Scheme,
}

impl<R: Real> QuadratureSpec<R> {
    pub fn new(lower: R, upper: R, panels: u64, scheme: Scheme) -> Result<Self> {
        if panels == 0 {
            return Err(domain("quadrature", "panels must be at least 1"));
        }
        if lower > upper {
            return Err(domain("quadrature", format!("lower {lower} exceeds upper {upper}")));
        }
        Ok(Self {
            lower,
            upper,
            panels,
            scheme,
        })
    }

    pub fn trapezoid(lower: R, upper: R, panels: u64) -> Result<Self> {
        Self::new(lower, upper, panels, Scheme::Trapezoid)
    }

    /// `(b−a)·h²·M/12` for the trapezoid rule and half that for the midpoint
    /// rule, with `M` the integrand's second-derivative bound.
    pub fn error_bound(&self, f: Integrand, ctx: &R::Context) -> Option<R> {
        let (a, b) = (self.lower.to_rational(), self.upper.to_rational());
        let m = f.second_derivative_bound(&a, &b)?;
        let width = &b - &a;
        let h = &width / int(self.panels);
        let denom = match self.scheme {
            Scheme::Trapezoid => 12,
            Scheme::Midpoint => 24,
        };
        Some(R::from_rational(&(width * &h * h * m / int(denom)), ctx))
    }
}

/// Composite midpoint or trapezoid estimate of `∫ f` over the spec's interval.
///
/// Panels are evaluated in parallel chunks and the chunk sums are added in
/// index order, so the result does not depend on the thread count.
pub fn quad<R: Real>(f: Integrand, spec: &QuadratureSpec<R>, ctx: &R::Context) -> Result<R> {
    let f = f.check()?;
    let n = spec.panels;
    let wide = R::widen(ctx, guard_digits_for(n) + 2);
    let a = spec.lower.in_context(&wide);
    let h = (spec.upper.in_context(&wide) - a.clone()) / R::from_int(n as i64, &wide);
    let half = R::from_ratio(1, 2, &wide)?;
    // sample offsets in units of h: i + 1/2 for midpoint, interior i for trapezoid
    let (first, last, shift) = match spec.scheme {
        Scheme::Midpoint => (0, n, half.clone()),
        Scheme::Trapezoid => (1, n, R::zero()),
    };
    let chunks: Vec<R> = (first..last)
        .step_by(CHUNK as usize)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|start| {
            let end = (start + CHUNK).min(last);
            (start..end).fold(R::zero(), |acc, i| {
                let t = a.clone() + h.clone() * (R::from_int(i as i64, &wide) + shift.clone());
                acc + f.eval(&t, &wide)
            })
        })
        .collect();
    let mut total = chunks.into_iter().fold(R::zero(), |acc, c| acc + c);
    if spec.scheme == Scheme::Trapezoid {
        let ends = f.eval(&a, &wide) + f.eval(&spec.upper.in_context(&wide), &wide);
        total = total + ends * half;
    }
    Ok((total * h).in_context(ctx))
}

fn check_unit(op: &'static str, x: &ExactRational, hi: u32) -> Result<()> {
    if *x < int(0) || *x > int(hi as u64) {
        return Err(domain(op, format!("argument outside [0, {hi}]")));
    }
    Ok(())
}

/// `√(2x − x²)` on `[0, 2]`.
pub fn circle_y<R: Real>(x: &R, ctx: &R::Context) -> Result<R> {
    check_unit("circle_y", &x.to_rational(), 2)?;
    let wide = R::widen(ctx, 4);
    let x = x.in_context(&wide);
    let r = x.clone() * (R::from_int(2, &wide) - x);
    Ok(r.sqrt()?.in_context(ctx))
}

/// Intercept of the tangent at `(x, y)` on the y-axis: `y − x·(1−x)/y`.
pub fn transmutation_z<R: Real>(x: &R, ctx: &R::Context) -> Result<R> {
    let rx = x.to_rational();
    if rx <= int(0) || rx >= int(2) {
        check_unit("transmutation_z", &rx, 2)?;
        return Err(Error::SingularEndpoint(x.to_string()));
    }
    let wide = R::widen(ctx, 6);
    let y = circle_y(x, &wide)?;
    let xw = x.in_context(&wide);
    let slope_term = xw.clone() * (R::one() - xw) / y.clone();
    Ok((y - slope_term).in_context(ctx))
}

/// `y − z(2 − x)`; zero up to rounding.
pub fn tangent_relation_residual<R: Real>(x: &R, ctx: &R::Context) -> Result<R> {
    let wide = R::widen(ctx, 6);
    let y = circle_y(x, &wide)?;
    let z = transmutation_z(x, &wide)?;
    let xw = x.in_context(&wide);
    Ok((y - z * (R::from_int(2, &wide) - xw)).in_context(ctx))
}

/// `x − c·z²/(1+z²)`. With `c = 1` this equals `x/2`; with `c = 2` it vanishes.
pub fn abscissa_relation_residual<R: Real>(x: &R, c: i64, ctx: &R::Context) -> Result<R> {
    let wide = R::widen(ctx, 6);
    let z = transmutation_z(x, &wide)?;
    let z2 = z.clone() * z;
    let rhs = R::from_int(c, &wide) * z2.clone() / (R::one() + z2);
    Ok((x.in_context(&wide) - rhs).in_context(ctx))
}

/// `z − ∫_0^z t²/(1+t²) dt` by the trapezoid rule with `panels` panels.
pub fn transmutation_arctan<R: Real>(z: &R, panels: u64, ctx: &R::Context) -> Result<R> {
    check_unit("transmutation_arctan", &z.to_rational(), 1)?;
    if z.to_rational() == int(0) {
        return Ok(R::zero());
    }
    let wide = R::widen(ctx, 2);
    let spec = QuadratureSpec::trapezoid(R::zero(), z.in_context(&wide), panels)?;
    let area = quad(Integrand::SquareRatio, &spec, &wide)?;
    Ok((z.in_context(&wide) - area).in_context(ctx))
}

/// `x^(2n+3)/(2n+3)`, which dominates `∫_0^x t^(2n+2)/(1+t²) dt`.
pub fn remainder_integral_bound<R: Real>(x: &R, n: u32, ctx: &R::Context) -> Result<R> {
    check_unit("remainder_integral_bound", &x.to_rational(), 1)?;
    let e = 2 * n + 3;
    let wide = R::widen(ctx, 2);
    Ok((x.in_context(&wide).powi(e) / R::from_int(e as i64, &wide)).in_context(ctx))
}
