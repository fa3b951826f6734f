//! Nonnegative rationals under ordinary addition and multiplication.
//!
//! This is the exact sub-semiring of the nonnegative reals that the
//! crate works in. `Ratio` keeps values reduced to lowest terms, which
//! is the canonical form.

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::Zero;

use crate::rng::SplitMix64;

pub type NonNegRational = Ratio<BigUint>;

pub fn make(numer: BigUint, denom: BigUint) -> Option<NonNegRational> {
    if denom.is_zero() {
        None
    } else {
        Some(Ratio::new(numer, denom))
    }
}

pub fn add(a: &NonNegRational, b: &NonNegRational) -> NonNegRational {
    a + b
}

pub fn mul(a: &NonNegRational, b: &NonNegRational) -> NonNegRational {
    a * b
}

/// Every strictly positive rational is a unit.
pub fn unit_inverse(a: &NonNegRational) -> Option<NonNegRational> {
    if a.is_zero() {
        None
    } else {
        Some(a.recip())
    }
}

pub fn sample(rng: &mut SplitMix64) -> NonNegRational {
    let numer = BigUint::from(rng.below(100));
    let denom = BigUint::from(1 + rng.below(30));
    Ratio::new(numer, denom)
}
