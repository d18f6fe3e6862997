//! Arithmetic substrates: decimal fixed-point reals, exact rationals, and
//! the reference functions used as independent oracles.

mod bigreal;
mod rational;
pub mod reference;

pub use bigreal::{BigReal, Precision, DEFAULT_DIGITS};
pub use rational::{alternating_sign, exact_sum, int, rat, ExactRational};
pub use reference::{arctan_reference, cos_reference, pi_quarter, pi_reference, sin_reference, tan_reference};

/// `num / den` truncated toward zero at `digits` decimal places.
pub fn br_from_ratio(
    num: impl Into<num_bigint::BigInt>,
    den: impl Into<num_bigint::BigInt>,
    digits: u32,
) -> crate::Result<BigReal> {
    BigReal::from_ratio(num, den, Precision::new(digits))
}

pub fn br_sqrt(x: &BigReal) -> crate::Result<BigReal> {
    x.sqrt()
}

pub fn br_arctan_reference(x: &BigReal) -> crate::Result<BigReal> {
    arctan_reference(x, &Precision::new(x.scale()))
}
