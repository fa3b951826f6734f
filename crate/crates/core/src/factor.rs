//! Irreducibility machinery: certificates for the three shapes that
//! drive the non-uniqueness argument, an exhaustive factorization
//! oracle for semirings with enumerable bounded coefficients, and
//! factorization equivalence up to units and order.
//!
//! The certificates argue abstractly from strictness; the oracle
//! enumerates factor pairs outright. Keeping both lets the tests check
//! the abstract arguments against ground truth instead of trusting
//! them.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::AlgebraError;
use crate::expr;
use crate::poly::{self, Polynomial};
use crate::semiring::{Element, SemiringDescriptor, SemiringKind, UnitStatus, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertVerdict {
    Irreducible,
    Reducible,
    Unknown,
}

impl CertVerdict {
    pub fn label(self) -> &'static str {
        match self {
            CertVerdict::Irreducible => "irreducible",
            CertVerdict::Reducible => "reducible",
            CertVerdict::Unknown => "unknown",
        }
    }
}

/// Which argument produced the verdict. `Lemma1` covers `T^n + a` with
/// `a` a unit, `Lemma2` the quadratic `T^2+T+1`, `Lemma3` the quartic
/// `T^4+T^2+1`; `ExhaustiveSearch` is the enumeration oracle and
/// `Budget` marks verdicts blocked by an exhausted equality budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertReason {
    Lemma1,
    Lemma2,
    Lemma3,
    ExhaustiveSearch,
    Budget,
}

impl CertReason {
    pub fn label(self) -> &'static str {
        match self {
            CertReason::Lemma1 => "lemma1",
            CertReason::Lemma2 => "lemma2",
            CertReason::Lemma3 => "lemma3",
            CertReason::ExhaustiveSearch => "exhaustive-search",
            CertReason::Budget => "budget",
        }
    }
}

/// Verdict plus provenance. Reducible certificates always carry factor
/// witnesses whose product has been verified equal to the target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibilityCertificate {
    pub verdict: CertVerdict,
    pub reason: CertReason,
    pub witness: Option<(Polynomial, Polynomial)>,
    pub detail: String,
}

fn require_strict(descriptor: &SemiringDescriptor) -> Result<(), AlgebraError> {
    if descriptor.is_strict() && descriptor.is_zero_divisor_free() {
        Ok(())
    } else {
        Err(AlgebraError::Precondition(format!(
            "{} is not registered as strict and zero-divisor-free",
            descriptor.id()
        )))
    }
}

/// Certificate that `T^n + a` is irreducible for a unit `a` and
/// `n >= 1`.
///
/// The recorded argument: a split into monic factors of degrees `m` and
/// `n - m` forces the constant coefficients to multiply to `a`, so both
/// are units and in particular nonzero; but the convolution coefficient
/// at degree `m` is a sum containing that nonzero constant and must
/// vanish, which strictness forbids.
pub fn binomial_certificate(
    descriptor: &SemiringDescriptor,
    n: u32,
    a: &Element,
) -> Result<IrreducibilityCertificate, AlgebraError> {
    require_strict(descriptor)?;
    if n < 1 {
        return Err(AlgebraError::Precondition("binomial shape needs degree >= 1".into()));
    }
    if a.semiring() != descriptor.kind() {
        return Err(AlgebraError::SemiringMismatch {
            op: "binomial certificate",
            left: descriptor.id(),
            right: a.semiring_id(),
        });
    }
    match a.unit_status() {
        UnitStatus::Unit(_) => {}
        UnitStatus::NotUnit => {
            return Err(AlgebraError::Precondition(format!(
                "constant term {a} is not a unit of {}",
                descriptor.id()
            )))
        }
        UnitStatus::Unknown => {
            return Ok(IrreducibilityCertificate {
                verdict: CertVerdict::Unknown,
                reason: CertReason::Budget,
                witness: None,
                detail: format!("unit status of {a} undetermined within the search budget"),
            })
        }
    }
    let detail = if n == 1 {
        "a linear polynomial cannot be a product of two non-units: degrees add and constant \
         factors of a monic linear polynomial are forced to be units"
            .to_owned()
    } else {
        format!(
            "any split of T^{n}+{a} into monic factors makes both constant coefficients units, \
             yet the convolution coefficient at the lower factor degree is a vanishing sum with \
             a unit summand, impossible in a strict semiring"
        )
    };
    Ok(IrreducibilityCertificate {
        verdict: CertVerdict::Irreducible,
        reason: CertReason::Lemma1,
        witness: None,
        detail,
    })
}

/// Certificate for `T^2+T+1`: reducible exactly when the semiring has a
/// unit `a` with `a + a^-1 = 1`, in which case it splits as
/// `(T+a)(T+a^-1)`; otherwise any monic split `(T+c)(T+d)` would force
/// `c*d = 1` and `c + d = 1`, i.e. such a unit.
pub fn quadratic_certificate(
    descriptor: &SemiringDescriptor,
) -> Result<IrreducibilityCertificate, AlgebraError> {
    require_strict(descriptor)?;
    let target = Polynomial::from_natural_coeffs(descriptor, &[1, 1, 1]);
    match descriptor.one_partner() {
        Some(partner) => {
            let left = poly::binomial(descriptor, 1, &partner.value);
            let right = poly::binomial(descriptor, 1, &partner.inverse);
            reducible_with_verified_witness(
                CertReason::Lemma2,
                &target,
                left,
                right,
                format!(
                    "T^2+T+1 = (T+{})(T+{}) since the witness pair multiplies and sums to one",
                    partner.value, partner.inverse
                ),
            )
        }
        None => Ok(IrreducibilityCertificate {
            verdict: CertVerdict::Irreducible,
            reason: CertReason::Lemma2,
            witness: None,
            detail: "a monic split (T+c)(T+d) would force c*d = 1 and c+d = 1, and no unit of \
                     this semiring sums with its inverse to one"
                .to_owned(),
        }),
    }
}

/// Certificate for `T^4+T^2+1`: reducible exactly under the same
/// partner condition, splitting as `(T^2+a)(T^2+a^-1)`. Without a
/// partner both conceivable shapes die: a linear-times-cubic split
/// forces a unit constant plus a cubic coefficient to vanish, which
/// strictness forbids, and a quadratic-times-quadratic split forces the
/// two linear coefficients to vanish and the constant coefficients to
/// multiply and sum to one.
pub fn quartic_certificate(
    descriptor: &SemiringDescriptor,
) -> Result<IrreducibilityCertificate, AlgebraError> {
    require_strict(descriptor)?;
    let target = Polynomial::from_natural_coeffs(descriptor, &[1, 0, 1, 0, 1]);
    match descriptor.one_partner() {
        Some(partner) => {
            let left = quadratic_binomial(descriptor, &partner.value);
            let right = quadratic_binomial(descriptor, &partner.inverse);
            reducible_with_verified_witness(
                CertReason::Lemma3,
                &target,
                left,
                right,
                format!(
                    "T^4+T^2+1 = (T^2+{})(T^2+{}) since the witness pair multiplies and sums to \
                     one",
                    partner.value, partner.inverse
                ),
            )
        }
        None => Ok(IrreducibilityCertificate {
            verdict: CertVerdict::Irreducible,
            reason: CertReason::Lemma3,
            witness: None,
            detail: "a linear-cubic split forces a unit constant into a vanishing sum, \
                     impossible by strictness; a quadratic-quadratic split forces both linear \
                     coefficients to zero and the constants to multiply and sum to one, i.e. a \
                     unit partner, which this semiring lacks"
                .to_owned(),
        }),
    }
}

fn quadratic_binomial(descriptor: &SemiringDescriptor, a: &Element) -> Polynomial {
    Polynomial::new(
        descriptor.kind(),
        vec![a.clone(), descriptor.zero(), descriptor.one()],
    )
    .expect("coefficients share the semiring")
}

fn reducible_with_verified_witness(
    reason: CertReason,
    target: &Polynomial,
    left: Polynomial,
    right: Polynomial,
    detail: String,
) -> Result<IrreducibilityCertificate, AlgebraError> {
    let product = left.mul(&right)?;
    match product.equiv(target)? {
        Verdict::Equal => Ok(IrreducibilityCertificate {
            verdict: CertVerdict::Reducible,
            reason,
            witness: Some((left, right)),
            detail,
        }),
        Verdict::Unknown => Ok(IrreducibilityCertificate {
            verdict: CertVerdict::Unknown,
            reason: CertReason::Budget,
            witness: None,
            detail: "witness product equality undetermined within the rewrite budget".to_owned(),
        }),
        Verdict::Distinct => Err(AlgebraError::Internal(
            "partner witness failed to reproduce the target product".into(),
        )),
    }
}

/// Match a polynomial against the three certified shapes and produce
/// the applicable certificate: `T^n + a` with `a` a unit, `T^2+T+1`, or
/// `T^4+T^2+1`. `None` when no certificate applies (including a
/// binomial whose constant is certifiably not a unit).
pub fn shape_certificate(
    descriptor: &SemiringDescriptor,
    p: &Polynomial,
) -> Result<Option<IrreducibilityCertificate>, AlgebraError> {
    let Some(degree) = p.degree() else {
        return Ok(None);
    };
    if degree < 1 || !p.is_monic() {
        return Ok(None);
    }
    let coeffs = p.coeffs();
    let is_binomial =
        !coeffs[0].is_zero() && coeffs[1..degree].iter().all(Element::is_zero);
    if is_binomial {
        return match coeffs[0].unit_status() {
            UnitStatus::NotUnit => Ok(None),
            _ => binomial_certificate(descriptor, degree as u32, &coeffs[0]).map(Some),
        };
    }
    let one_at = |i: usize| p.coeff(i).is_one();
    if degree == 2 && one_at(0) && one_at(1) {
        return quadratic_certificate(descriptor).map(Some);
    }
    if degree == 4 && one_at(0) && one_at(2) && p.coeff(1).is_zero() && p.coeff(3).is_zero() {
        return quartic_certificate(descriptor).map(Some);
    }
    Ok(None)
}

/// Certificate from the exhaustive oracle: irreducible when no split
/// exists within the bound, otherwise reducible with the first split in
/// canonical order as witness.
pub fn exhaustive_certificate(
    p: &Polynomial,
    bound: u64,
) -> Result<IrreducibilityCertificate, AlgebraError> {
    let splits = brute_force_split(p, bound)?;
    Ok(match splits.into_iter().next() {
        Some((left, right)) => IrreducibilityCertificate {
            verdict: CertVerdict::Reducible,
            reason: CertReason::ExhaustiveSearch,
            witness: Some((left, right)),
            detail: format!("found by exhaustive enumeration within coefficient bound {bound}"),
        },
        None => IrreducibilityCertificate {
            verdict: CertVerdict::Irreducible,
            reason: CertReason::ExhaustiveSearch,
            witness: None,
            detail: format!("no factor pair exists within coefficient bound {bound}"),
        },
    })
}

/// Options for the enumeration oracle. Non-monic enumeration is
/// supported but off by default: every polynomial the verifier touches
/// is monic, and dropping the restriction multiplies the search space.
#[derive(Debug, Clone)]
pub struct SplitOptions {
    pub bound: u64,
    pub monic_only: bool,
}

impl Default for SplitOptions {
    fn default() -> Self {
        Self { bound: 4, monic_only: true }
    }
}

/// All ordered-normalized pairs `(q, r)` of nonconstant polynomials
/// with `q * r = p`, coefficients drawn from the enumerable set capped
/// by `bound`; monic mode.
pub fn brute_force_split(
    p: &Polynomial,
    bound: u64,
) -> Result<Vec<(Polynomial, Polynomial)>, AlgebraError> {
    brute_force_split_with(p, &SplitOptions { bound, monic_only: true })
}

/// Enumeration oracle. For the naturals with monic `p` the search is
/// complete, not heuristic: convolution terms cannot cancel in a strict
/// semiring, so each factor coefficient is bounded by the target
/// coefficient sitting one co-factor-degree above it, and the
/// enumeration covers that whole box (intersected with `bound`).
pub fn brute_force_split_with(
    p: &Polynomial,
    options: &SplitOptions,
) -> Result<Vec<(Polynomial, Polynomial)>, AlgebraError> {
    let descriptor = p.semiring().descriptor();
    if !descriptor.capabilities().coefficients_enumerable_bounded {
        return Err(AlgebraError::Unsupported {
            semiring: descriptor.id(),
            operation: "bounded coefficient enumeration".into(),
        });
    }
    let Some(n) = p.degree() else {
        return Err(AlgebraError::Precondition("cannot split the zero polynomial".into()));
    };
    if n < 2 {
        return Err(AlgebraError::Precondition("splitting needs degree >= 2".into()));
    }
    if options.monic_only && !p.is_monic() {
        return Err(AlgebraError::Precondition(
            "monic mode requires a monic polynomial (use non-monic mode)".into(),
        ));
    }

    let mut found: BTreeSet<(Polynomial, Polynomial)> = BTreeSet::new();
    for m in 1..=n / 2 {
        let left_degree = m;
        let right_degree = n - m;
        for q in candidate_factors(p, left_degree, right_degree, options, &descriptor) {
            for r in candidate_factors(p, right_degree, left_degree, options, &descriptor) {
                if q.mul(&r)?.equiv(p)? == Verdict::Equal {
                    found.insert(normalize_pair(q.clone(), r));
                }
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// Candidate coefficient vectors for a factor of the given degree.
/// Coefficient `i` of a degree-`d` factor is capped by coefficient
/// `i + other_degree` of the target (and by the caller's bound).
fn candidate_factors(
    p: &Polynomial,
    degree: usize,
    other_degree: usize,
    options: &SplitOptions,
    descriptor: &SemiringDescriptor,
) -> Vec<Polynomial> {
    let boolean = descriptor.kind() == SemiringKind::Boolean;
    let cap_at = |i: usize| -> u64 {
        let target_coeff = p.coeff(i + other_degree);
        let ceiling = if boolean {
            u64::from(!target_coeff.is_zero())
        } else {
            target_coeff
                .as_nat()
                .map(|c| c.to_u64().unwrap_or(u64::MAX))
                .unwrap_or(0)
        };
        ceiling.min(options.bound).min(if boolean { 1 } else { u64::MAX })
    };

    let mut caps: Vec<u64> = (0..degree).map(cap_at).collect();
    let leading_cap = cap_at(degree);
    caps.push(leading_cap);

    let mut out = Vec::new();
    let mut vector = vec![0u64; degree + 1];
    enumerate_vectors(&caps, options.monic_only, &mut vector, degree + 1, &mut |coeffs| {
        if coeffs[degree] == 0 {
            return;
        }
        out.push(Polynomial::from_natural_coeffs(descriptor, coeffs));
    });
    out
}

fn enumerate_vectors(
    caps: &[u64],
    monic_only: bool,
    vector: &mut Vec<u64>,
    len: usize,
    emit: &mut impl FnMut(&[u64]),
) {
    fn walk(
        caps: &[u64],
        monic_only: bool,
        vector: &mut Vec<u64>,
        index: usize,
        emit: &mut impl FnMut(&[u64]),
    ) {
        if index == vector.len() {
            emit(vector);
            return;
        }
        let leading = index == vector.len() - 1;
        let range: Vec<u64> = if leading && monic_only {
            vec![1]
        } else if leading {
            (1..=caps[index]).collect()
        } else {
            (0..=caps[index]).collect()
        };
        for value in range {
            vector[index] = value;
            walk(caps, monic_only, vector, index + 1, emit);
        }
    }
    debug_assert_eq!(vector.len(), len);
    walk(caps, monic_only, vector, 0, emit);
}

/// Order pairs by (degree, ascending coefficient sequence) so each
/// unordered split is reported once.
fn normalize_pair(q: Polynomial, r: Polynomial) -> (Polynomial, Polynomial) {
    if split_key(&q) <= split_key(&r) {
        (q, r)
    } else {
        (r, q)
    }
}

fn split_key(p: &Polynomial) -> (usize, Vec<Element>) {
    (p.coeffs().len(), p.coeffs().to_vec())
}

/// A multiset of nonconstant factors together with a unit scalar whose
/// product reproduces the factored polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Element,
    pub factors: Vec<Polynomial>,
}

impl Factorization {
    pub fn new(unit: Element, mut factors: Vec<Polynomial>) -> Self {
        factors.sort_by_key(split_key);
        Self { unit, factors }
    }

    pub fn product(&self) -> Result<Polynomial, AlgebraError> {
        let mut acc = Polynomial::constant(self.unit.clone());
        for f in &self.factors {
            acc = acc.mul(f)?;
        }
        Ok(acc)
    }

    /// Sorted factor degrees. Degrees are the fast invariant here: two
    /// factors differing by a unit scalar always have equal degree.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> =
            self.factors.iter().map(|f| f.degree().unwrap_or(0)).collect();
        degrees.sort_unstable();
        degrees
    }

    pub fn rendered_factors(&self) -> Vec<String> {
        self.factors.iter().map(expr::render).collect()
    }
}

/// Complete set of factorizations into irreducibles, found by
/// recursively refining oracle splits until nothing splits further.
/// Over the naturals and the Booleans the unit group is trivial, so
/// multiset equality of factors coincides with equivalence up to units
/// and deduplication is plain set insertion.
pub fn all_factorizations(
    p: &Polynomial,
    bound: u64,
) -> Result<Vec<Factorization>, AlgebraError> {
    all_factorizations_with(p, &SplitOptions { bound, monic_only: true })
}

pub fn all_factorizations_with(
    p: &Polynomial,
    options: &SplitOptions,
) -> Result<Vec<Factorization>, AlgebraError> {
    let Some(degree) = p.degree() else {
        return Err(AlgebraError::Precondition("cannot factor the zero polynomial".into()));
    };
    if degree < 1 {
        return Err(AlgebraError::Precondition("cannot factor a constant".into()));
    }
    let mut memo: BTreeMap<Polynomial, BTreeSet<Vec<Polynomial>>> = BTreeMap::new();
    let sets = refine(p, options, &mut memo)?;
    let one = p.semiring().descriptor().one();
    Ok(sets
        .into_iter()
        .map(|factors| Factorization::new(one.clone(), factors))
        .collect())
}

fn refine(
    p: &Polynomial,
    options: &SplitOptions,
    memo: &mut BTreeMap<Polynomial, BTreeSet<Vec<Polynomial>>>,
) -> Result<BTreeSet<Vec<Polynomial>>, AlgebraError> {
    if let Some(hit) = memo.get(p) {
        return Ok(hit.clone());
    }
    let mut results = BTreeSet::new();
    let splits = if p.degree() == Some(1) {
        Vec::new()
    } else {
        brute_force_split_with(p, options)?
    };
    if splits.is_empty() {
        results.insert(vec![p.clone()]);
    } else {
        for (q, r) in splits {
            for left in refine(&q, options, memo)? {
                for right in refine(&r, options, memo)? {
                    let mut combined = left.clone();
                    combined.extend(right.iter().cloned());
                    combined.sort_by_key(split_key);
                    results.insert(combined);
                }
            }
        }
    }
    memo.insert(p.clone(), results.clone());
    Ok(results)
}

/// Equivalence of factorizations up to permutation and unit scalars:
/// true when a bijection matches every factor of one with a factor of
/// the other differing only by a unit of the coefficient semiring.
/// Degree multisets are compared first as a sound fast filter. Unknown
/// coefficient equality propagates as `Unknown`.
pub fn factorization_equiv(
    f: &Factorization,
    g: &Factorization,
) -> Result<Verdict, AlgebraError> {
    if f.factors.len() != g.factors.len() {
        return Ok(Verdict::Distinct);
    }
    if f.degree_multiset() != g.degree_multiset() {
        return Ok(Verdict::Distinct);
    }
    let mut used = vec![false; g.factors.len()];
    match_factors(&f.factors, &g.factors, &mut used, 0)
}

fn match_factors(
    fs: &[Polynomial],
    gs: &[Polynomial],
    used: &mut Vec<bool>,
    index: usize,
) -> Result<Verdict, AlgebraError> {
    if index == fs.len() {
        return Ok(Verdict::Equal);
    }
    let mut saw_unknown = false;
    for j in 0..gs.len() {
        if used[j] {
            continue;
        }
        match unit_scalar_verdict(&fs[index], &gs[j])? {
            Verdict::Equal => {
                used[j] = true;
                match match_factors(fs, gs, used, index + 1)? {
                    Verdict::Equal => return Ok(Verdict::Equal),
                    Verdict::Unknown => saw_unknown = true,
                    Verdict::Distinct => {}
                }
                used[j] = false;
            }
            Verdict::Unknown => saw_unknown = true,
            Verdict::Distinct => {}
        }
    }
    Ok(if saw_unknown { Verdict::Unknown } else { Verdict::Distinct })
}

/// Whether `q = u * r` for some unit `u`. The candidate is pinned by
/// the leading coefficients (when it exists at all it is unique) and
/// then verified coefficientwise.
fn unit_scalar_verdict(q: &Polynomial, r: &Polynomial) -> Result<Verdict, AlgebraError> {
    if q.semiring() != r.semiring() {
        return Err(AlgebraError::SemiringMismatch {
            op: "factor matching",
            left: q.semiring().id(),
            right: r.semiring().id(),
        });
    }
    if q.degree() != r.degree() {
        return Ok(Verdict::Distinct);
    }
    if q.equiv(r)? == Verdict::Equal {
        return Ok(Verdict::Equal);
    }
    let (Some(lq), Some(lr)) = (q.leading_coeff(), r.leading_coeff()) else {
        return Ok(Verdict::Equal); // both zero
    };
    match unit_quotient(lq, lr) {
        Some(u) => match u.unit_status() {
            UnitStatus::Unit(_) => q.equiv(&r.scale(&u)?),
            UnitStatus::NotUnit => Ok(Verdict::Distinct),
            UnitStatus::Unknown => Ok(Verdict::Unknown),
        },
        None => {
            // No candidate: decisive for carriers with complete
            // equality, undetermined for the presented semiring.
            if q.semiring() == SemiringKind::S0 {
                Ok(Verdict::Unknown)
            } else {
                Ok(Verdict::Distinct)
            }
        }
    }
}

/// Solve `a = u * b` for `u`, per carrier. The leading coefficients of
/// nonzero polynomials are nonzero, which rules zero `b` out everywhere
/// the quotient is taken.
fn unit_quotient(a: &Element, b: &Element) -> Option<Element> {
    use num_traits::Zero;
    match a.semiring() {
        SemiringKind::Nat => {
            let (x, y) = (a.as_nat()?, b.as_nat()?);
            if y.is_zero() || !(x % y).is_zero() {
                None
            } else {
                Some(Element::natural(x / y))
            }
        }
        SemiringKind::Boolean => a.as_boolean().map(Element::boolean),
        SemiringKind::NonNegRational => {
            let (x, y) = (a.as_rational()?, b.as_rational()?);
            if y.is_zero() {
                None
            } else {
                let quotient = x / y;
                Element::rational(quotient.numer().clone(), quotient.denom().clone())
            }
        }
        SemiringKind::TropicalMinPlus => {
            use crate::instances::Tropical;
            match (a.as_tropical()?, b.as_tropical()?) {
                (Tropical::Finite(x), Tropical::Finite(y)) => {
                    Some(Element::tropical(Tropical::Finite(x - y)))
                }
                _ => None,
            }
        }
        SemiringKind::MonoidNat => {
            let (x, y) = (a.as_monoid()?, b.as_monoid()?);
            let (xt, yt) = (x.terms(), y.terms());
            if xt.len() != yt.len() || xt.is_empty() {
                return None;
            }
            let (first_x, _) = xt.iter().next()?;
            let (first_y, _) = yt.iter().next()?;
            let shift = first_x / first_y;
            let shifted_matches = xt
                .iter()
                .zip(yt.iter())
                .all(|((qx, cx), (qy, cy))| cx == cy && *qx == qy * &shift);
            if shifted_matches {
                Some(Element::monoid(crate::instances::MonoidNat::term(
                    shift,
                    BigUint::from(1u32),
                )))
            } else {
                None
            }
        }
        SemiringKind::S0 => {
            let (x, y) = (a.as_s0()?, b.as_s0()?);
            let (xt, yt) = (x.terms(), y.terms());
            if xt.len() != yt.len() || xt.is_empty() {
                return None;
            }
            let shift = xt.keys().next()? - yt.keys().next()?;
            let shifted_matches = xt
                .iter()
                .zip(yt.iter())
                .all(|((&kx, cx), (&ky, cy))| cx == cy && kx == ky + shift);
            if shifted_matches {
                Some(Element::presented(crate::s0::S0Value::power(shift)))
            } else {
                None
            }
        }
    }
}
