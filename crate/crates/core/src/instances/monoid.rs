//! The monoid semiring of finite natural-coefficient combinations of
//! positive rationals under multiplication.
//!
//! An element is a formal sum of monomials `c * [q]` with `c` a positive
//! natural and `q` a positive rational exponent; the product is the
//! convolution in which exponents multiply, since the underlying monoid
//! is the positive rationals under multiplication. Exponents are stored
//! exactly; no completion to real exponents is attempted.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::rng::SplitMix64;

pub type Exponent = Ratio<BigUint>;

/// Canonical form: no zero coefficients stored; the empty map is the
/// semiring zero and `{1 -> 1}` is the one.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MonoidNat {
    terms: BTreeMap<Exponent, BigUint>,
}

impl MonoidNat {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::term(Exponent::one(), BigUint::one())
    }

    /// Single monomial `coeff * [exponent]`. Zero coefficients collapse
    /// to the zero element; the exponent must be strictly positive.
    pub fn term(exponent: Exponent, coeff: BigUint) -> Self {
        assert!(!exponent.numer().is_zero(), "exponent must be positive");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponent, coeff);
        }
        Self { terms }
    }

    pub fn from_natural(n: &BigUint) -> Self {
        Self::term(Exponent::one(), n.clone())
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, BigUint> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total coefficient sum. This is a semiring homomorphism onto the
    /// naturals: additive because sums merge coefficients, and
    /// multiplicative because every monomial pair contributes exactly
    /// once to the convolution.
    pub fn mass(&self) -> BigUint {
        self.terms.values().sum()
    }
}

pub fn add(a: &MonoidNat, b: &MonoidNat) -> MonoidNat {
    let mut terms = a.terms.clone();
    for (exponent, coeff) in &b.terms {
        terms
            .entry(exponent.clone())
            .and_modify(|c| *c += coeff)
            .or_insert_with(|| coeff.clone());
    }
    MonoidNat { terms }
}

pub fn mul(a: &MonoidNat, b: &MonoidNat) -> MonoidNat {
    let mut terms: BTreeMap<Exponent, BigUint> = BTreeMap::new();
    for (qa, ca) in &a.terms {
        for (qb, cb) in &b.terms {
            let exponent = qa * qb;
            let coeff = ca * cb;
            terms
                .entry(exponent)
                .and_modify(|c| *c += &coeff)
                .or_insert(coeff);
        }
    }
    MonoidNat { terms }
}

/// An element is a unit exactly when it is a single monomial with
/// coefficient 1; the inverse inverts the exponent. Everything else has
/// coefficient mass != 1, and mass is multiplicative, so no inverse can
/// exist.
pub fn unit_inverse(a: &MonoidNat) -> Option<MonoidNat> {
    if a.terms.len() != 1 {
        return None;
    }
    let (exponent, coeff) = a.terms.iter().next().unwrap();
    if !coeff.is_one() {
        return None;
    }
    Some(MonoidNat::term(exponent.recip(), BigUint::one()))
}

pub fn sample(rng: &mut SplitMix64) -> MonoidNat {
    let n_terms = rng.below(4);
    let mut acc = MonoidNat::zero();
    for _ in 0..n_terms {
        let numer = BigUint::from(1 + rng.below(12));
        let denom = BigUint::from(1 + rng.below(6));
        let coeff = BigUint::from(1 + rng.below(4));
        acc = add(&acc, &MonoidNat::term(Ratio::new(numer, denom), coeff));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: u64, d: u64) -> Exponent {
        Ratio::new(n.into(), d.into())
    }

    fn term(n: u64, d: u64, c: u64) -> MonoidNat {
        MonoidNat::term(q(n, d), c.into())
    }

    #[test]
    fn exponents_multiply() {
        assert_eq!(mul(&term(2, 1, 1), &term(3, 1, 1)), term(6, 1, 1));
    }

    #[test]
    fn one_is_identity() {
        let a = add(&term(2, 1, 3), &term(1, 2, 1));
        assert_eq!(mul(&MonoidNat::one(), &a), a);
    }

    #[test]
    fn square_of_two_term_sum() {
        let s = add(&term(1, 1, 1), &term(2, 1, 1));
        let expected = add(&add(&term(1, 1, 1), &term(2, 1, 2)), &term(4, 1, 1));
        assert_eq!(mul(&s, &s), expected);
    }

    #[test]
    fn units_are_single_unit_coefficient_terms() {
        assert_eq!(unit_inverse(&term(2, 1, 1)), Some(term(1, 2, 1)));
        assert_eq!(unit_inverse(&term(2, 1, 3)), None);
        assert_eq!(unit_inverse(&add(&term(1, 1, 1), &term(2, 1, 1))), None);
        assert_eq!(unit_inverse(&MonoidNat::zero()), None);
    }

    #[test]
    fn no_inverse_for_coefficient_three_by_search() {
        // Two-sided confirmation for {2 -> 3}: no candidate with small
        // support convolves to the identity, as the mass argument says.
        let a = term(2, 1, 3);
        for n in 1..6u64 {
            for d in 1..6u64 {
                for c in 1..6u64 {
                    assert_ne!(mul(&a, &term(n, d, c)), MonoidNat::one());
                }
            }
        }
    }

    #[test]
    fn mass_is_multiplicative() {
        let a = add(&term(2, 1, 3), &term(1, 3, 2));
        let b = add(&term(5, 2, 1), &term(2, 1, 4));
        assert_eq!(mul(&a, &b).mass(), a.mass() * b.mass());
    }
}
