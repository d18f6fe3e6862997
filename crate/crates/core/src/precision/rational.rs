use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-size integer ratio, always in lowest terms with a positive denominator.
pub type ExactRational = BigRational;

pub fn rat(num: impl Into<BigInt>, den: impl Into<BigInt>) -> ExactRational {
    ExactRational::new(num.into(), den.into())
}

pub fn int(n: impl Into<BigInt>) -> ExactRational {
    ExactRational::from_integer(n.into())
}

/// Sums rationals by pairwise splitting on unreduced numerator/denominator
/// pairs and reduces once at the end.
///
/// Folding with `+` normalises after every step, which costs a gcd on an
/// ever-growing denominator; the tree keeps operand sizes balanced.
pub fn exact_sum<I>(terms: I) -> ExactRational
where
    I: IntoIterator<Item = ExactRational>,
{
    let mut level: Vec<(BigInt, BigInt)> = terms
        .into_iter()
        .map(|r| {
            let (n, d) = r.into();
            (n, d)
        })
        .collect();
    if level.is_empty() {
        return ExactRational::zero();
    }
    while level.len() > 1 {
        let mut next = Vec::with_capacity(level.len().div_ceil(2));
        let mut it = level.into_iter();
        while let Some((an, ad)) = it.next() {
            match it.next() {
                Some((bn, bd)) => {
                    if ad == bd {
                        next.push((an + bn, ad));
                    } else {
                        next.push((an * &bd + bn * &ad, ad * bd));
                    }
                }
                None => next.push((an, ad)),
            }
        }
        level = next;
    }
    let (n, d) = level.pop().unwrap();
    ExactRational::new(n, d)
}

/// `(-1)^k` as a rational.
pub fn alternating_sign(k: u64) -> ExactRational {
    if k % 2 == 0 {
        ExactRational::one()
    } else {
        -ExactRational::one()
    }
}
