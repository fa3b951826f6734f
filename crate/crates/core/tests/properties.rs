//! Property tests for the algebraic laws and the engine invariants.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use proptest::prelude::*;

use sempoly::expr;
use sempoly::instances::{MonoidNat, Tropical};
use sempoly::s0::{self, contract, EqOutcome, RewriteBudget, TermBag};
use sempoly::semiring::{Element, SemiringKind, UnitStatus, Verdict};

fn nat_element() -> impl Strategy<Value = Element> {
    (0u64..200).prop_map(Element::natural)
}

fn rational_element() -> impl Strategy<Value = Element> {
    (0u64..100, 1u64..40).prop_map(|(n, d)| Element::rational(n, d).unwrap())
}

fn tropical_element() -> impl Strategy<Value = Element> {
    prop_oneof![
        1 => Just(Element::tropical(Tropical::Infinity)),
        7 => (-60i64..60).prop_map(|v| Element::tropical(Tropical::from_integer(v))),
    ]
}

fn monoid_value() -> impl Strategy<Value = MonoidNat> {
    proptest::collection::vec((1u64..10, 1u64..6, 1u64..4), 0..3).prop_map(|terms| {
        let mut acc = MonoidNat::zero();
        for (n, d, c) in terms {
            let term = MonoidNat::term(
                num_rational::Ratio::new(BigUint::from(n), BigUint::from(d)),
                BigUint::from(c),
            );
            acc = sempoly::instances::monoid::add(&acc, &term);
        }
        acc
    })
}

fn monoid_element() -> impl Strategy<Value = Element> {
    monoid_value().prop_map(Element::monoid)
}

fn s0_bag() -> impl Strategy<Value = TermBag> {
    proptest::collection::vec((-3i64..=3, 1u64..=2), 0..4).prop_map(|terms| {
        let mut bag: TermBag = BTreeMap::new();
        for (k, c) in terms {
            bag.entry(k)
                .and_modify(|m| *m += BigUint::from(c))
                .or_insert_with(|| BigUint::from(c));
        }
        bag
    })
}

fn s0_element() -> impl Strategy<Value = Element> {
    s0_bag().prop_map(|bag| Element::presented(contract(bag)))
}

fn element_for(kind: SemiringKind) -> BoxedStrategy<Element> {
    match kind {
        SemiringKind::Nat => nat_element().boxed(),
        SemiringKind::NonNegRational => rational_element().boxed(),
        SemiringKind::Boolean => proptest::bool::ANY.prop_map(Element::boolean).boxed(),
        SemiringKind::TropicalMinPlus => tropical_element().boxed(),
        SemiringKind::MonoidNat => monoid_element().boxed(),
        SemiringKind::S0 => s0_element().boxed(),
    }
}

/// (a, b, c) from one semiring, any of the six.
fn same_semiring_triple() -> impl Strategy<Value = (Element, Element, Element)> {
    proptest::sample::select(SemiringKind::all().to_vec()).prop_flat_map(|kind| {
        (element_for(kind), element_for(kind), element_for(kind))
    })
}

fn assert_equalish(lhs: &Element, rhs: &Element) -> Result<(), TestCaseError> {
    // Budgeted equality may abstain over the presented semiring, but
    // must never claim distinctness of equal values.
    prop_assert_ne!(lhs.equiv(rhs).unwrap(), Verdict::Distinct);
    Ok(())
}

proptest! {
    #[test]
    fn add_commutes((a, b, _) in same_semiring_triple()) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
    }

    #[test]
    fn mul_commutes((a, b, _) in same_semiring_triple()) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
    }

    #[test]
    fn add_associates((a, b, c) in same_semiring_triple()) {
        let left = a.add(&b).unwrap().add(&c).unwrap();
        let right = a.add(&b.add(&c).unwrap()).unwrap();
        assert_equalish(&left, &right)?;
    }

    #[test]
    fn mul_distributes((a, b, c) in same_semiring_triple()) {
        let left = a.mul(&b.add(&c).unwrap()).unwrap();
        let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        assert_equalish(&left, &right)?;
    }

    #[test]
    fn zero_absorbs((a, _, _) in same_semiring_triple()) {
        let zero = a.semiring().descriptor().zero();
        prop_assert!(a.mul(&zero).unwrap().is_zero());
    }

    #[test]
    fn unit_inverses_verify((a, _, _) in same_semiring_triple()) {
        if let UnitStatus::Unit(inv) = a.unit_status() {
            prop_assert_eq!(
                a.mul(&inv).unwrap().equiv(&a.semiring().descriptor().one()).unwrap(),
                Verdict::Equal
            );
        }
    }

    #[test]
    fn monoid_mass_is_multiplicative(a in monoid_value(), b in monoid_value()) {
        use sempoly::instances::monoid;
        let product = monoid::mul(&a, &b);
        prop_assert_eq!(product.mass(), a.mass() * b.mass());
        let sum = monoid::add(&a, &b);
        prop_assert_eq!(sum.mass(), a.mass() + b.mass());
    }
}

proptest! {
    #[test]
    fn contraction_is_a_fixed_point_and_preserves_class(bag in s0_bag()) {
        let normal = contract(bag.clone());
        // Fixed point: contracting the normal form changes nothing.
        prop_assert_eq!(contract(normal.terms().clone()), normal.clone());
        // Mass never grows and the separator image is invariant.
        let raw_mass: BigUint = bag.values().sum();
        prop_assert!(normal.mass() <= raw_mass);
        prop_assert_eq!(normal.image(), s0::eisenstein::image_of_terms(&bag));
        // No pair of stored exponents sits at distance two.
        let keys: Vec<i64> = normal.terms().keys().copied().collect();
        for k in &keys {
            prop_assert!(!normal.terms().contains_key(&(k + 2)));
        }
    }

    #[test]
    fn rewrite_paths_certify_equality(bag in s0_bag(), steps in proptest::collection::vec(0usize..6, 0..4)) {
        // Walk a few random enabled steps away from a value; the engine
        // must prove the endpoints congruent and return a replayable
        // trace.
        let start = contract(bag);
        let mut current = start.terms().clone();
        for choice in steps {
            let keys: Vec<i64> = current.keys().copied().collect();
            if keys.is_empty() {
                break;
            }
            let k = keys[choice % keys.len()];
            if let Some(next) =
                s0::search::apply_step(&current, s0::RewriteStep::Expand { exponent: k })
            {
                current = next;
            }
        }
        let end = contract(current);
        let budget = RewriteBudget::default();
        match s0::decide_eq(&start, &end, &budget) {
            EqOutcome::Equal(trace) => {
                let replayed = s0::search::replay(start.terms(), &trace).unwrap();
                prop_assert_eq!(&replayed, end.terms());
            }
            other => return Err(TestCaseError::fail(format!("expected Equal, got {other:?}"))),
        }
    }
}

proptest! {
    #[test]
    fn parser_never_panics_and_errors_stay_in_bounds(src in "[T0-9a-z+*^()/ -]{0,24}") {
        let nat = SemiringKind::Nat.descriptor();
        if let Err(e) = expr::parse(&src, &nat) {
            prop_assert!(e.offset <= src.len());
            prop_assert!(e.line >= 1 && e.column >= 1);
        }
    }

    #[test]
    fn natural_units_by_brute_search(n in 0u64..60, m in 0u64..60) {
        // The only multiplicative inverse pair among small naturals is
        // (1, 1), which is what the closed-form unit procedure says.
        let product_is_one = n * m == 1;
        prop_assert_eq!(product_is_one, n == 1 && m == 1);
        if let UnitStatus::Unit(inv) = Element::natural(n).unit_status() {
            prop_assert_eq!(Element::natural(n), Element::natural(1u64));
            prop_assert_eq!(inv, Element::natural(1u64));
        }
    }
}
