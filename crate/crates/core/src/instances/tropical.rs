//! The tropical min-plus semifield over exact rationals.
//!
//! Addition is `min`, multiplication is numeric `+`. The additive zero
//! is the distinguished infinity and the multiplicative one is the
//! numeric 0, so every finite value is a unit with inverse its numeric
//! negation. The max-plus variant would be isomorphic; this crate fixes
//! the min-plus convention throughout.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::rng::SplitMix64;

/// A tropical value: a finite exact rational or the additive zero.
///
/// The derived ordering places every finite value below `Infinity`,
/// which is exactly the order `min` needs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Tropical {
    Finite(BigRational),
    Infinity,
}

impl Tropical {
    pub fn zero() -> Self {
        Tropical::Infinity
    }

    pub fn one() -> Self {
        Tropical::Finite(BigRational::zero())
    }

    pub fn finite(value: BigRational) -> Self {
        Tropical::Finite(value)
    }

    pub fn from_integer(n: i64) -> Self {
        Tropical::Finite(BigRational::from(BigInt::from(n)))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Tropical::Finite(_))
    }
}

pub fn add(a: &Tropical, b: &Tropical) -> Tropical {
    std::cmp::min(a, b).clone()
}

pub fn mul(a: &Tropical, b: &Tropical) -> Tropical {
    match (a, b) {
        (Tropical::Finite(x), Tropical::Finite(y)) => Tropical::Finite(x + y),
        _ => Tropical::Infinity,
    }
}

/// Every finite value is a unit; the inverse is the numeric negation.
pub fn unit_inverse(a: &Tropical) -> Option<Tropical> {
    match a {
        Tropical::Finite(x) => Some(Tropical::Finite(-x)),
        Tropical::Infinity => None,
    }
}

pub fn sample(rng: &mut SplitMix64) -> Tropical {
    if rng.below(8) == 0 {
        Tropical::Infinity
    } else {
        let numer = BigInt::from(rng.range_i64(-100, 100));
        let denom = BigInt::from(1 + rng.below(10) as i64);
        Tropical::Finite(BigRational::new(numer, denom))
    }
}
