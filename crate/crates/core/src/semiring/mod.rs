//! The semiring abstraction: tagged exact elements, the registry of
//! built-in instances, the canonical map from the naturals, unit
//! procedures, and the sampled axiom harness.
//!
//! Every element carries the identity of the semiring it belongs to and
//! operations reject mixed operands outright; there is no implicit
//! coercion between carriers. All values are canonical on construction,
//! so structural equality decides semiring equality everywhere except
//! in the presented semiring, whose word problem is only attacked up to
//! a rewrite budget; that is why equality is a three-valued verdict.

pub mod axioms;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::One;

use crate::error::AlgebraError;
use crate::instances::rational::NonNegRational;
use crate::instances::{boolean, monoid, nat, rational, tropical, MonoidNat, Tropical};
use crate::rng::SplitMix64;
use crate::s0::{self, EqOutcome, RewriteBudget, S0Value};

/// Outcome of an equality test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    Distinct,
    Unknown,
}

impl Verdict {
    /// Conjunction: everything must be equal for the whole to be.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::Distinct, _) | (_, Verdict::Distinct) => Verdict::Distinct,
            (Verdict::Unknown, _) | (_, Verdict::Unknown) => Verdict::Unknown,
            _ => Verdict::Equal,
        }
    }

    pub fn is_equal(self) -> bool {
        self == Verdict::Equal
    }

    pub fn label(self) -> &'static str {
        match self {
            Verdict::Equal => "equal",
            Verdict::Distinct => "distinct",
            Verdict::Unknown => "unknown",
        }
    }
}

/// Identifier of a registered semiring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SemiringKind {
    Boolean,
    MonoidNat,
    Nat,
    NonNegRational,
    S0,
    TropicalMinPlus,
}

impl SemiringKind {
    /// Stable identifier string.
    pub fn id(self) -> &'static str {
        match self {
            SemiringKind::Boolean => "boolean",
            SemiringKind::MonoidNat => "monoid-nat",
            SemiringKind::Nat => "nat",
            SemiringKind::NonNegRational => "nonneg-rational",
            SemiringKind::S0 => "s0",
            SemiringKind::TropicalMinPlus => "tropical-min-plus",
        }
    }

    /// All built-in kinds in id order.
    pub fn all() -> [SemiringKind; 6] {
        [
            SemiringKind::Boolean,
            SemiringKind::MonoidNat,
            SemiringKind::Nat,
            SemiringKind::NonNegRational,
            SemiringKind::S0,
            SemiringKind::TropicalMinPlus,
        ]
    }

    pub fn descriptor(self) -> SemiringDescriptor {
        SemiringDescriptor { kind: self }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) enum Payload {
    Boolean(bool),
    MonoidNat(MonoidNat),
    Nat(BigUint),
    NonNegRational(NonNegRational),
    S0(S0Value),
    Tropical(Tropical),
}

/// A tagged exact value belonging to exactly one semiring.
///
/// Structural (`==`) equality compares canonical representations; use
/// [`Element::equiv`] for semiring equality, which coincides with the
/// structural one on every carrier except the presented semiring.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Element {
    payload: Payload,
}

impl Element {
    pub(crate) fn from_payload(payload: Payload) -> Self {
        Self { payload }
    }

    pub fn semiring(&self) -> SemiringKind {
        match &self.payload {
            Payload::Boolean(_) => SemiringKind::Boolean,
            Payload::MonoidNat(_) => SemiringKind::MonoidNat,
            Payload::Nat(_) => SemiringKind::Nat,
            Payload::NonNegRational(_) => SemiringKind::NonNegRational,
            Payload::S0(_) => SemiringKind::S0,
            Payload::Tropical(_) => SemiringKind::TropicalMinPlus,
        }
    }

    pub fn semiring_id(&self) -> &'static str {
        self.semiring().id()
    }

    // Constructors.

    pub fn natural(n: impl Into<BigUint>) -> Self {
        Self::from_payload(Payload::Nat(n.into()))
    }

    pub fn boolean(b: bool) -> Self {
        Self::from_payload(Payload::Boolean(b))
    }

    pub fn rational(numer: impl Into<BigUint>, denom: impl Into<BigUint>) -> Option<Self> {
        rational::make(numer.into(), denom.into())
            .map(|r| Self::from_payload(Payload::NonNegRational(r)))
    }

    pub fn tropical(value: Tropical) -> Self {
        Self::from_payload(Payload::Tropical(value))
    }

    pub fn monoid(value: MonoidNat) -> Self {
        Self::from_payload(Payload::MonoidNat(value))
    }

    pub fn presented(value: S0Value) -> Self {
        Self::from_payload(Payload::S0(value))
    }

    pub fn s0_x() -> Self {
        Self::presented(S0Value::x())
    }

    pub fn s0_y() -> Self {
        Self::presented(S0Value::y())
    }

    // Payload accessors for sibling modules.

    pub(crate) fn as_nat(&self) -> Option<&BigUint> {
        match &self.payload {
            Payload::Nat(n) => Some(n),
            _ => None,
        }
    }

    pub(crate) fn as_boolean(&self) -> Option<bool> {
        match &self.payload {
            Payload::Boolean(b) => Some(*b),
            _ => None,
        }
    }

    pub(crate) fn as_rational(&self) -> Option<&NonNegRational> {
        match &self.payload {
            Payload::NonNegRational(r) => Some(r),
            _ => None,
        }
    }

    pub(crate) fn as_tropical(&self) -> Option<&Tropical> {
        match &self.payload {
            Payload::Tropical(t) => Some(t),
            _ => None,
        }
    }

    pub(crate) fn as_monoid(&self) -> Option<&MonoidNat> {
        match &self.payload {
            Payload::MonoidNat(m) => Some(m),
            _ => None,
        }
    }

    pub(crate) fn as_s0(&self) -> Option<&S0Value> {
        match &self.payload {
            Payload::S0(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        use num_traits::Zero;
        match &self.payload {
            Payload::Boolean(b) => !b,
            Payload::MonoidNat(m) => m.is_zero(),
            Payload::Nat(n) => n.is_zero(),
            Payload::NonNegRational(r) => r.is_zero(),
            Payload::S0(v) => v.is_zero(),
            Payload::Tropical(t) => *t == Tropical::Infinity,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.payload {
            Payload::Boolean(b) => *b,
            Payload::MonoidNat(m) => *m == MonoidNat::one(),
            Payload::Nat(n) => n.is_one(),
            Payload::NonNegRational(r) => r.is_one(),
            Payload::S0(v) => v.is_one(),
            Payload::Tropical(t) => *t == Tropical::one(),
        }
    }

    fn mismatch(&self, other: &Element, op: &'static str) -> AlgebraError {
        AlgebraError::SemiringMismatch {
            op,
            left: self.semiring_id(),
            right: other.semiring_id(),
        }
    }

    /// Semiring sum in canonical form.
    pub fn add(&self, other: &Element) -> Result<Element, AlgebraError> {
        let payload = match (&self.payload, &other.payload) {
            (Payload::Boolean(a), Payload::Boolean(b)) => Payload::Boolean(boolean::add(*a, *b)),
            (Payload::MonoidNat(a), Payload::MonoidNat(b)) => Payload::MonoidNat(monoid::add(a, b)),
            (Payload::Nat(a), Payload::Nat(b)) => Payload::Nat(nat::add(a, b)),
            (Payload::NonNegRational(a), Payload::NonNegRational(b)) => {
                Payload::NonNegRational(rational::add(a, b))
            }
            (Payload::S0(a), Payload::S0(b)) => Payload::S0(a.add(b)),
            (Payload::Tropical(a), Payload::Tropical(b)) => Payload::Tropical(tropical::add(a, b)),
            _ => return Err(self.mismatch(other, "add")),
        };
        Ok(Element::from_payload(payload))
    }

    /// Semiring product in canonical form.
    pub fn mul(&self, other: &Element) -> Result<Element, AlgebraError> {
        let payload = match (&self.payload, &other.payload) {
            (Payload::Boolean(a), Payload::Boolean(b)) => Payload::Boolean(boolean::mul(*a, *b)),
            (Payload::MonoidNat(a), Payload::MonoidNat(b)) => Payload::MonoidNat(monoid::mul(a, b)),
            (Payload::Nat(a), Payload::Nat(b)) => Payload::Nat(nat::mul(a, b)),
            (Payload::NonNegRational(a), Payload::NonNegRational(b)) => {
                Payload::NonNegRational(rational::mul(a, b))
            }
            (Payload::S0(a), Payload::S0(b)) => Payload::S0(a.mul(b)),
            (Payload::Tropical(a), Payload::Tropical(b)) => Payload::Tropical(tropical::mul(a, b)),
            _ => return Err(self.mismatch(other, "mul")),
        };
        Ok(Element::from_payload(payload))
    }

    /// Equality verdict under the default rewrite budget.
    pub fn equiv(&self, other: &Element) -> Result<Verdict, AlgebraError> {
        self.equiv_with(other, &RewriteBudget::default())
    }

    /// Equality verdict. Only the presented semiring can answer
    /// `Unknown`; every other carrier has complete equality.
    pub fn equiv_with(
        &self,
        other: &Element,
        budget: &RewriteBudget,
    ) -> Result<Verdict, AlgebraError> {
        match (&self.payload, &other.payload) {
            (Payload::S0(a), Payload::S0(b)) => Ok(match s0::decide_eq(a, b, budget) {
                EqOutcome::Equal(_) => Verdict::Equal,
                EqOutcome::Distinct(_) => Verdict::Distinct,
                EqOutcome::Unknown => Verdict::Unknown,
            }),
            (a, b) => {
                if self.semiring() != other.semiring() {
                    return Err(self.mismatch(other, "equiv"));
                }
                Ok(if a == b { Verdict::Equal } else { Verdict::Distinct })
            }
        }
    }

    /// Unit test with per-semiring procedure: closed form where the unit
    /// group is known, bounded search in the presented semiring.
    pub fn unit_status(&self) -> UnitStatus {
        let inverse = match &self.payload {
            Payload::Boolean(b) => boolean::unit_inverse(*b).map(Element::boolean),
            Payload::MonoidNat(m) => monoid::unit_inverse(m).map(Element::monoid),
            Payload::Nat(n) => nat::unit_inverse(n).map(Element::natural),
            Payload::NonNegRational(r) => rational::unit_inverse(r)
                .map(|r| Element::from_payload(Payload::NonNegRational(r))),
            Payload::S0(v) => return s0_unit_status(v),
            Payload::Tropical(t) => tropical::unit_inverse(t).map(Element::tropical),
        };
        match inverse {
            Some(inv) => {
                let product = self.mul(&inv).expect("inverse lives in the same semiring");
                assert!(product.is_one(), "unit procedure returned a non-inverse");
                UnitStatus::Unit(inv)
            }
            None => UnitStatus::NotUnit,
        }
    }
}

/// Outcome of the unit search: a verified inverse, a certified
/// non-unit, or an exhausted search budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnitStatus {
    Unit(Element),
    NotUnit,
    Unknown,
}

impl UnitStatus {
    pub fn into_inverse(self) -> Option<Element> {
        match self {
            UnitStatus::Unit(inv) => Some(inv),
            _ => None,
        }
    }
}

fn s0_unit_status(v: &S0Value) -> UnitStatus {
    use num_traits::One as _;
    if v.is_zero() {
        return UnitStatus::NotUnit;
    }
    if v.terms().len() == 1 {
        let (&k, coeff) = v.terms().iter().next().unwrap();
        if coeff.is_one() {
            let inv = S0Value::power(-k);
            assert!(v.mul(&inv).is_one());
            return UnitStatus::Unit(Element::presented(inv));
        }
    }
    // The separating homomorphism maps units to units of its target
    // ring, whose units are exactly the norm-one elements.
    if !v.image().norm().is_one() {
        return UnitStatus::NotUnit;
    }
    // Norm one but not a plain power: search small candidates.
    let budget = RewriteBudget::default();
    let one = S0Value::one();
    for candidate in small_s0_candidates() {
        if s0::decide_eq(&v.mul(&candidate), &one, &budget).is_equal() {
            return UnitStatus::Unit(Element::presented(candidate));
        }
    }
    UnitStatus::Unknown
}

fn small_s0_candidates() -> Vec<S0Value> {
    let mut out = Vec::new();
    for k in -3i64..=3 {
        for c in 1..=2u64 {
            out.push(S0Value::from_terms([(k, c)]));
        }
    }
    for k1 in -3i64..=3 {
        for k2 in (k1 + 1)..=3 {
            for (c1, c2) in [(1u64, 1u64), (1, 2), (2, 1)] {
                out.push(S0Value::from_terms([(k1, c1), (k2, c2)]));
            }
        }
    }
    out
}

/// A verified witness pair `(a, a^-1)` with `a * a^-1 = 1` and
/// `a + a^-1 = 1`. Its existence is exactly the reducibility criterion
/// for the quadratic and quartic certificate shapes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnePartner {
    pub value: Element,
    pub inverse: Element,
}

/// Capability flags of a registered semiring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Capabilities {
    pub units_enumerable: bool,
    pub coefficients_enumerable_bounded: bool,
    pub equality_complete: bool,
}

/// A registered semiring: identity elements, canonical map from the
/// naturals, unit and partner procedures, sampler, and capability
/// flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SemiringDescriptor {
    kind: SemiringKind,
}

impl SemiringDescriptor {
    pub fn kind(&self) -> SemiringKind {
        self.kind
    }

    pub fn id(&self) -> &'static str {
        self.kind.id()
    }

    pub fn capabilities(&self) -> Capabilities {
        match self.kind {
            SemiringKind::Boolean => Capabilities {
                units_enumerable: true,
                coefficients_enumerable_bounded: true,
                equality_complete: true,
            },
            SemiringKind::Nat => Capabilities {
                units_enumerable: true,
                coefficients_enumerable_bounded: true,
                equality_complete: true,
            },
            SemiringKind::MonoidNat | SemiringKind::NonNegRational | SemiringKind::TropicalMinPlus => {
                Capabilities {
                    units_enumerable: false,
                    coefficients_enumerable_bounded: false,
                    equality_complete: true,
                }
            }
            SemiringKind::S0 => Capabilities {
                units_enumerable: false,
                coefficients_enumerable_bounded: false,
                equality_complete: false,
            },
        }
    }

    /// Registration-time declaration that `a + b = 0` forces
    /// `a = b = 0`; the axiom harness backs it by sampling.
    pub fn is_strict(&self) -> bool {
        true
    }

    /// Registration-time declaration that `a * b = 0` forces `a = 0` or
    /// `b = 0`.
    pub fn is_zero_divisor_free(&self) -> bool {
        true
    }

    pub fn zero(&self) -> Element {
        use num_traits::Zero;
        let payload = match self.kind {
            SemiringKind::Boolean => Payload::Boolean(false),
            SemiringKind::MonoidNat => Payload::MonoidNat(MonoidNat::zero()),
            SemiringKind::Nat => Payload::Nat(BigUint::zero()),
            SemiringKind::NonNegRational => Payload::NonNegRational(NonNegRational::zero()),
            SemiringKind::S0 => Payload::S0(S0Value::zero()),
            SemiringKind::TropicalMinPlus => Payload::Tropical(Tropical::zero()),
        };
        Element::from_payload(payload)
    }

    pub fn one(&self) -> Element {
        let payload = match self.kind {
            SemiringKind::Boolean => Payload::Boolean(true),
            SemiringKind::MonoidNat => Payload::MonoidNat(MonoidNat::one()),
            SemiringKind::Nat => Payload::Nat(BigUint::one()),
            SemiringKind::NonNegRational => Payload::NonNegRational(NonNegRational::one()),
            SemiringKind::S0 => Payload::S0(S0Value::one()),
            SemiringKind::TropicalMinPlus => Payload::Tropical(Tropical::one()),
        };
        Element::from_payload(payload)
    }

    /// Canonical map from the naturals: the `n`-fold sum of one, with 0
    /// mapping to zero. Closed forms per carrier.
    pub fn from_natural(&self, n: &BigUint) -> Element {
        use num_traits::Zero;
        let payload = match self.kind {
            SemiringKind::Boolean => Payload::Boolean(!n.is_zero()),
            SemiringKind::MonoidNat => Payload::MonoidNat(MonoidNat::from_natural(n)),
            SemiringKind::Nat => Payload::Nat(n.clone()),
            SemiringKind::NonNegRational => {
                Payload::NonNegRational(Ratio::from_integer(n.clone()))
            }
            SemiringKind::S0 => Payload::S0(S0Value::from_natural(n)),
            SemiringKind::TropicalMinPlus => Payload::Tropical(if n.is_zero() {
                Tropical::zero()
            } else {
                Tropical::one()
            }),
        };
        Element::from_payload(payload)
    }

    pub fn from_u64(&self, n: u64) -> Element {
        self.from_natural(&BigUint::from(n))
    }

    /// Pseudo-random element, deterministic in the generator state.
    pub fn sample(&self, rng: &mut SplitMix64) -> Element {
        let payload = match self.kind {
            SemiringKind::Boolean => Payload::Boolean(boolean::sample(rng)),
            SemiringKind::MonoidNat => Payload::MonoidNat(monoid::sample(rng)),
            SemiringKind::Nat => Payload::Nat(nat::sample(rng)),
            SemiringKind::NonNegRational => Payload::NonNegRational(rational::sample(rng)),
            SemiringKind::S0 => Payload::S0(s0::sample(rng)),
            SemiringKind::TropicalMinPlus => Payload::Tropical(tropical::sample(rng)),
        };
        Element::from_payload(payload)
    }

    /// Witness for `a * a^-1 = 1` and `a + a^-1 = 1`, or a proof of
    /// absence executed as a finite check.
    pub fn one_partner(&self) -> Option<OnePartner> {
        let one = self.one();
        let witness = match self.kind {
            // The only unit is 1, and 1 + 1 = 2 != 1.
            SemiringKind::Nat => {
                let sum = one.add(&one).unwrap();
                if sum.is_one() {
                    Some((one.clone(), one.clone()))
                } else {
                    None
                }
            }
            // a + 1/a = 1 would make a a positive root of t^2 - t + 1,
            // whose discriminant 1 - 4 is negative.
            SemiringKind::NonNegRational => None,
            // Coefficient mass is a homomorphism onto the naturals;
            // every unit has mass 1, so a + a^-1 has mass 2 while the
            // one has mass 1.
            SemiringKind::MonoidNat => None,
            // Idempotent addition: 1 + 1 = 1.
            SemiringKind::Boolean | SemiringKind::TropicalMinPlus => {
                Some((one.clone(), one.clone()))
            }
            // The presentation ships the witness.
            SemiringKind::S0 => Some((Element::s0_x(), Element::s0_y())),
        };
        witness.map(|(value, inverse)| {
            let product = value.mul(&inverse).unwrap();
            let sum = value.add(&inverse).unwrap();
            assert!(product.is_one() && sum.is_one(), "partner witness failed verification");
            OnePartner { value, inverse }
        })
    }
}

/// Registry of semiring instances. The built-ins are always present;
/// ids are unique.
#[derive(Debug, Clone)]
pub struct Registry {
    entries: Vec<SemiringDescriptor>,
}

impl Registry {
    pub fn with_builtins() -> Self {
        Self { entries: SemiringKind::all().map(SemiringKind::descriptor).to_vec() }
    }

    pub fn register(&mut self, descriptor: SemiringDescriptor) -> Result<(), AlgebraError> {
        if self.entries.iter().any(|d| d.id() == descriptor.id()) {
            return Err(AlgebraError::DuplicateSemiring(descriptor.id().to_owned()));
        }
        self.entries.push(descriptor);
        self.entries.sort_by_key(|d| d.id());
        Ok(())
    }

    pub fn get(&self, id: &str) -> Result<&SemiringDescriptor, AlgebraError> {
        self.entries
            .iter()
            .find(|d| d.id() == id)
            .ok_or_else(|| AlgebraError::UnknownSemiring(id.to_owned()))
    }

    /// Descriptors in id order.
    pub fn descriptors(&self) -> &[SemiringDescriptor] {
        &self.entries
    }
}

impl Default for Registry {
    fn default() -> Self {
        Self::with_builtins()
    }
}
