//! Separating homomorphism target for the presented semiring.
//!
//! The presentation demands a unit `x` with `x + x^-1 = 1`, and a
//! primitive sixth root of unity satisfies exactly that: writing `z` for
//! a root of `z^2 = z - 1`, one has `z * (1 - z) = 1` and
//! `z + (1 - z) = 1`. Evaluating formal sums at `x -> z` therefore
//! factors through the congruence, so distinct images certify distinct
//! elements. The image ring is the integers extended by `z`, represented
//! as exact integer pairs `a + b*z`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

/// `a + b*z` with `z^2 = z - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EisensteinImage {
    pub a: BigInt,
    pub b: BigInt,
}

impl EisensteinImage {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self { a: a.into(), b: b.into() }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { a: &self.a + &other.a, b: &self.b + &other.b }
    }

    /// `(a + b*z)(c + d*z) = ac + (ad + bc)z + bd*z^2`, and
    /// `z^2 = z - 1` folds the quadratic term back in.
    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.a, &self.b);
        let (c, d) = (&other.a, &other.b);
        let bd = b * d;
        Self { a: a * c - &bd, b: a * d + b * c + bd }
    }

    /// `z` has order six, so powers reduce modulo 6.
    pub fn zeta_pow(exponent: i64) -> Self {
        match exponent.rem_euclid(6) {
            0 => Self::new(1, 0),
            1 => Self::new(0, 1),
            2 => Self::new(-1, 1),
            3 => Self::new(-1, 0),
            4 => Self::new(0, -1),
            5 => Self::new(1, -1),
            _ => unreachable!(),
        }
    }

    /// Multiplicative norm `a^2 + ab + b^2`; it is 1 exactly on the six
    /// units `±z^k` of the image ring, and nonnegative everywhere.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a + &self.a * &self.b + &self.b * &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

/// Image of a formal sum of powers: the sum of `coeff * z^exponent`.
pub fn image_of_terms(terms: &BTreeMap<i64, BigUint>) -> EisensteinImage {
    let mut acc = EisensteinImage::zero();
    for (&exponent, coeff) in terms {
        let coeff = BigInt::from(coeff.clone());
        let p = EisensteinImage::zeta_pow(exponent);
        acc = acc.add(&EisensteinImage { a: &p.a * &coeff, b: &p.b * &coeff });
    }
    acc
}
