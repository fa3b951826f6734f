//! The finitely presented semiring generated by `x` and `y` with
//! `x*y = 1` and `x + y = 1`.
//!
//! Since `x*y = 1` makes the monomial monoid a group, `y` collapses to
//! `x^-1` up front and an element is a finite natural-coefficient
//! combination of integer powers `x^k`. That removes one relation
//! entirely; the remaining congruence is generated by the family
//! `x^(k+1) + x^(k-1) ~ x^k`, obtained from `x + y ~ 1` by multiplying
//! with `x^k`.
//!
//! Contraction (rewriting a `k+1`/`k-1` pair down to `k`) terminates but
//! is not confluent: `x^2 + 1 + x^-2` contracts to both `x + x^-2` and
//! `x^2 + x^-1`. The contraction-normal form is therefore only a storage
//! canonicalization, not an equality decision. Equality is decided by
//! [`decide_eq`]: identical normal forms, a zero-mass check, a
//! separating homomorphism into the Eisenstein integers (sound for
//! distinctness), and finally a budgeted bidirectional rewrite-graph
//! search that yields a replayable proof trace. When everything is
//! exhausted the verdict is `Unknown`, never a guess: whether the word
//! problem of this presentation is decidable is left open.

pub mod eisenstein;
pub mod search;

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub use eisenstein::EisensteinImage;
pub use search::{RewriteBudget, RewriteStep, SearchOutcome, TermBag};

use crate::rng::SplitMix64;

/// A value in contraction-normal form: no two stored exponents are at
/// distance exactly 2. The empty map is zero, `{0 -> 1}` is one,
/// `{1 -> 1}` is `x` and `{-1 -> 1}` is `y`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct S0Value {
    terms: BTreeMap<i64, BigUint>,
}

impl S0Value {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::power(0)
    }

    pub fn x() -> Self {
        Self::power(1)
    }

    pub fn y() -> Self {
        Self::power(-1)
    }

    /// The monomial `x^k` (`y^-k` for negative `k`).
    pub fn power(k: i64) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(k, BigUint::one());
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, u64)>>(entries: I) -> Self {
        let mut bag: TermBag = BTreeMap::new();
        for (k, c) in entries {
            if c > 0 {
                bag.entry(k).and_modify(|m| *m += BigUint::from(c)).or_insert_with(|| c.into());
            }
        }
        contract(bag)
    }

    pub fn from_natural(n: &BigUint) -> Self {
        let mut terms = BTreeMap::new();
        if !n.is_zero() {
            terms.insert(0, n.clone());
        }
        Self { terms }
    }

    pub fn terms(&self) -> &BTreeMap<i64, BigUint> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(BigUint::is_one)
    }

    /// Total multiplicity of the stored multiset.
    pub fn mass(&self) -> BigUint {
        self.terms.values().sum()
    }

    pub fn image(&self) -> EisensteinImage {
        eisenstein::image_of_terms(&self.terms)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut bag = self.terms.clone();
        for (&k, c) in &other.terms {
            bag.entry(k).and_modify(|m| *m += c).or_insert_with(|| c.clone());
        }
        contract(bag)
    }

    /// Exponent-adding convolution followed by contraction.
    pub fn mul(&self, other: &Self) -> Self {
        let mut bag: TermBag = BTreeMap::new();
        for (&ka, ca) in &self.terms {
            for (&kb, cb) in &other.terms {
                let coeff = ca * cb;
                bag.entry(ka + kb).and_modify(|m| *m += &coeff).or_insert(coeff);
            }
        }
        contract(bag)
    }
}

fn smallest_center(bag: &TermBag) -> Option<i64> {
    bag.keys().find(|&&k| bag.contains_key(&(k + 2))).map(|&k| k + 1)
}

/// Exhaustively apply the contraction rule, always at the smallest
/// eligible center, until no pair of exponents at distance 2 remains.
/// Each application lowers the total multiplicity by one, so at most
/// `mass - 1` applications run.
pub fn contract(mut bag: TermBag) -> S0Value {
    bag.retain(|_, c| !c.is_zero());
    while let Some(center) = smallest_center(&bag) {
        let lo = bag[&(center - 1)].clone();
        let hi = bag[&(center + 1)].clone();
        // Contracting in bulk at this center matches repeated
        // single-step smallest-center applications unless `center - 2`
        // is populated, in which case one application makes the smaller
        // center `center - 1` eligible and the policy moves there.
        let bulk = if bag.contains_key(&(center - 2)) {
            BigUint::one()
        } else {
            lo.min(hi)
        };
        for key in [center - 1, center + 1] {
            let c = bag.get_mut(&key).unwrap();
            *c -= &bulk;
            if c.is_zero() {
                bag.remove(&key);
            }
        }
        bag.entry(center).and_modify(|m| *m += &bulk).or_insert(bulk);
    }
    S0Value { terms: bag }
}

/// Why a pair of values is certifiably distinct.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistinctReason {
    /// Both rewrite rules preserve nonemptiness of the term multiset,
    /// so zero is congruent only to itself.
    ZeroMass,
    /// The separating homomorphism images differ.
    SeparatorImage,
}

/// Outcome of a congruence test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EqOutcome {
    /// Congruent, with a replayable step trace from the first normal
    /// form to the second.
    Equal(Vec<RewriteStep>),
    Distinct(DistinctReason),
    /// Budget exhausted; congruence undetermined.
    Unknown,
}

impl EqOutcome {
    pub fn is_equal(&self) -> bool {
        matches!(self, EqOutcome::Equal(_))
    }
}

/// Decide congruence of two stored values within a budget.
pub fn decide_eq(a: &S0Value, b: &S0Value, budget: &RewriteBudget) -> EqOutcome {
    if a.terms == b.terms {
        return EqOutcome::Equal(Vec::new());
    }
    if a.is_zero() != b.is_zero() {
        return EqOutcome::Distinct(DistinctReason::ZeroMass);
    }
    if a.image() != b.image() {
        return EqOutcome::Distinct(DistinctReason::SeparatorImage);
    }
    match search::connect(&a.terms, &b.terms, budget) {
        SearchOutcome::Connected(steps) => EqOutcome::Equal(steps),
        SearchOutcome::Exhausted => EqOutcome::Unknown,
    }
}

/// Small-support sampler. Supports stay within `x^-2 ..= x^2` and the
/// multiset mass stays at most 3, which keeps every congruence check the
/// axiom harness can pose well inside the default search budget.
pub fn sample(rng: &mut SplitMix64) -> S0Value {
    let shape = rng.below(8);
    let n_terms = match shape {
        0 => 0,
        1..=4 => 1,
        _ => 2,
    };
    let mut entries = Vec::new();
    for i in 0..n_terms {
        let exponent = rng.range_i64(-2, 2);
        let coeff = if i == 0 && rng.below(4) == 0 { 2 } else { 1 };
        entries.push((exponent, coeff));
    }
    S0Value::from_terms(entries)
}
