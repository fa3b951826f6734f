//! The natural numbers with ordinary addition and multiplication.

use num_bigint::BigUint;
use num_traits::One;

use crate::rng::SplitMix64;

pub fn add(a: &BigUint, b: &BigUint) -> BigUint {
    a + b
}

pub fn mul(a: &BigUint, b: &BigUint) -> BigUint {
    a * b
}

/// The only natural with a multiplicative inverse is 1.
pub fn unit_inverse(a: &BigUint) -> Option<BigUint> {
    if a.is_one() {
        Some(BigUint::one())
    } else {
        None
    }
}

/// Mixes small values (including 0 and 1) with occasional multi-limb
/// ones so bignum paths get exercised.
pub fn sample(rng: &mut SplitMix64) -> BigUint {
    if rng.below(8) == 0 {
        let hi = rng.next_u64();
        let lo = rng.next_u64();
        (BigUint::from(hi) << 64) | BigUint::from(lo)
    } else {
        BigUint::from(rng.below(100))
    }
}
