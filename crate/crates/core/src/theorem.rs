//! End-to-end verifier that unique factorization fails in the
//! polynomial algebra over each registered semiring.
//!
//! The engine builds two factorizations of `T^5+T^4+T^3+T^2+T+1` whose
//! shape depends on whether the semiring has a unit `a` with
//! `a + a^-1 = 1`:
//!
//! - no partner: `(T+1)(T^4+T^2+1)` against `(T^3+1)(T^2+T+1)`, all four
//!   factors certified irreducible;
//! - partner `a`: `(T+1)(T^2+a)(T^2+a^-1)` against
//!   `(T^3+1)(T+a)(T+a^-1)`, every factor a binomial with a unit
//!   constant and therefore certified by the binomial argument alone.
//!
//! In both cases the two degree multisets differ, and since the units of
//! the polynomial algebra are the units of the coefficient semiring,
//! factors of different degree can never be associates. A verified
//! report is therefore a machine-checked counterexample to unique
//! factorization.

use crate::error::AlgebraError;
use crate::factor::{
    binomial_certificate, quartic_certificate, quadratic_certificate, CertVerdict, Factorization,
    IrreducibilityCertificate,
};
use crate::poly::{self, Polynomial};
use crate::s0::RewriteBudget;
use crate::semiring::axioms::check_axioms_with;
use crate::semiring::{OnePartner, SemiringDescriptor, Verdict};

/// Which branch of the case split applies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UfdCase {
    NoPartner,
    Partner(OnePartner),
}

impl UfdCase {
    pub fn label(&self) -> &'static str {
        match self {
            UfdCase::NoPartner => "no-partner",
            UfdCase::Partner(_) => "partner",
        }
    }

    pub fn partner(&self) -> Option<&OnePartner> {
        match self {
            UfdCase::NoPartner => None,
            UfdCase::Partner(p) => Some(p),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TheoremVerdict {
    NotUfd,
    Inconclusive { failing_check: String },
}

impl TheoremVerdict {
    pub fn is_not_ufd(&self) -> bool {
        matches!(self, TheoremVerdict::NotUfd)
    }

    pub fn label(&self) -> &'static str {
        match self {
            TheoremVerdict::NotUfd => "not-ufd",
            TheoremVerdict::Inconclusive { .. } => "inconclusive",
        }
    }
}

/// Full audit trail of one verification run. Construction is
/// deterministic: factor and certificate order is fixed, and the axiom
/// fingerprint pins the sampled run backing the strictness declaration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonUfdReport {
    pub semiring: &'static str,
    pub case: UfdCase,
    pub product: Polynomial,
    pub factorization_a: Factorization,
    pub factorization_b: Factorization,
    pub certificates: Vec<(Polynomial, IrreducibilityCertificate)>,
    pub degree_multisets: (Vec<usize>, Vec<usize>),
    pub verdict: TheoremVerdict,
    pub axiom_fingerprint: String,
}

/// Configuration for [`verify_non_ufd_with`].
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub axiom_seed: u64,
    pub axiom_samples: u32,
    pub budget: RewriteBudget,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { axiom_seed: 0, axiom_samples: 200, budget: RewriteBudget::default() }
    }
}

/// The case-appropriate pair of factorizations of the sextic target.
/// All coefficients come from the canonical natural map or the partner
/// witness.
pub fn witness_pair(
    descriptor: &SemiringDescriptor,
) -> Result<(Factorization, Factorization, UfdCase), AlgebraError> {
    let one = descriptor.one();
    let linear = poly::binomial(descriptor, 1, &one);
    let cubic = poly::binomial(descriptor, 3, &one);
    match descriptor.one_partner() {
        None => {
            let quartic = Polynomial::from_natural_coeffs(descriptor, &[1, 0, 1, 0, 1]);
            let quadratic = Polynomial::from_natural_coeffs(descriptor, &[1, 1, 1]);
            Ok((
                Factorization::new(one.clone(), vec![linear, quartic]),
                Factorization::new(one, vec![cubic, quadratic]),
                UfdCase::NoPartner,
            ))
        }
        Some(partner) => {
            let a = partner.value.clone();
            let a_inv = partner.inverse.clone();
            let fact_a = Factorization::new(
                one.clone(),
                vec![
                    linear,
                    poly::binomial(descriptor, 2, &a),
                    poly::binomial(descriptor, 2, &a_inv),
                ],
            );
            let fact_b = Factorization::new(
                one,
                vec![
                    cubic,
                    poly::binomial(descriptor, 1, &a),
                    poly::binomial(descriptor, 1, &a_inv),
                ],
            );
            Ok((fact_a, fact_b, UfdCase::Partner(partner)))
        }
    }
}

pub fn verify_non_ufd(descriptor: &SemiringDescriptor) -> Result<NonUfdReport, AlgebraError> {
    verify_non_ufd_with(descriptor, &VerifyConfig::default())
}

/// Run the whole pipeline: sampled axiom backing, witness construction,
/// product checks against the sextic target, per-factor certificates,
/// and the degree-multiset comparison. Any undetermined equality makes
/// the verdict `Inconclusive`; a false positive is never emitted.
pub fn verify_non_ufd_with(
    descriptor: &SemiringDescriptor,
    config: &VerifyConfig,
) -> Result<NonUfdReport, AlgebraError> {
    if !descriptor.is_strict() || !descriptor.is_zero_divisor_free() {
        return Err(AlgebraError::Precondition(format!(
            "{} is not registered as strict and zero-divisor-free",
            descriptor.id()
        )));
    }
    let axiom_report =
        check_axioms_with(descriptor, config.axiom_seed, config.axiom_samples, &config.budget);
    let (factorization_a, factorization_b, case) = witness_pair(descriptor)?;
    let target = poly::sextic_target(descriptor);

    let mut failing: Option<String> = None;
    let fail = |check: &str, failing: &mut Option<String>| {
        if failing.is_none() {
            *failing = Some(check.to_owned());
        }
    };

    if !axiom_report.all_passed() {
        fail("axiom-harness", &mut failing);
    }

    for (name, fact) in
        [("factorization-a-product", &factorization_a), ("factorization-b-product", &factorization_b)]
    {
        if failing.is_none() {
            let product = fact.product()?;
            if product.equiv_with(&target, &config.budget)? != Verdict::Equal {
                fail(name, &mut failing);
            }
        }
    }

    let mut certificates = Vec::new();
    for factor_poly in factorization_a.factors.iter().chain(&factorization_b.factors) {
        let certificate = certify_factor(descriptor, factor_poly, &case)?;
        if certificate.verdict != CertVerdict::Irreducible && failing.is_none() {
            fail(&format!("certificate:{}", crate::expr::render(factor_poly)), &mut failing);
        }
        certificates.push((factor_poly.clone(), certificate));
    }

    let degree_multisets = (factorization_a.degree_multiset(), factorization_b.degree_multiset());
    if degree_multisets.0 == degree_multisets.1 {
        fail("degree-multisets", &mut failing);
    }

    Ok(NonUfdReport {
        semiring: descriptor.id(),
        case,
        product: target,
        factorization_a,
        factorization_b,
        certificates,
        degree_multisets,
        verdict: match failing {
            None => TheoremVerdict::NotUfd,
            Some(failing_check) => TheoremVerdict::Inconclusive { failing_check },
        },
        axiom_fingerprint: axiom_report.fingerprint(),
    })
}

/// Certify one witness factor. In the no-partner case the quadratic and
/// quartic shapes carry their own arguments; in the partner case every
/// factor is a binomial with a unit constant, so the binomial argument
/// covers them all.
fn certify_factor(
    descriptor: &SemiringDescriptor,
    factor_poly: &Polynomial,
    case: &UfdCase,
) -> Result<IrreducibilityCertificate, AlgebraError> {
    let degree = factor_poly
        .degree()
        .ok_or_else(|| AlgebraError::Internal("witness factor is zero".into()))?;
    match case {
        UfdCase::NoPartner => match degree {
            1 | 3 => binomial_certificate(descriptor, degree as u32, &factor_poly.coeff(0)),
            2 => quadratic_certificate(descriptor),
            4 => quartic_certificate(descriptor),
            _ => Err(AlgebraError::Internal(format!("unexpected factor degree {degree}"))),
        },
        UfdCase::Partner(_) => {
            binomial_certificate(descriptor, degree as u32, &factor_poly.coeff(0))
        }
    }
}

/// The idempotent shortcut: over a semiring with `1 + 1 = 1`,
/// `(T+1)(T^2+1)` and `(T+1)^3` are two factorizations of
/// `T^3+T^2+T+1` with degree multisets {1,2} and {1,1,1}.
pub fn idempotent_demo(descriptor: &SemiringDescriptor) -> Result<NonUfdReport, AlgebraError> {
    idempotent_demo_with(descriptor, &VerifyConfig::default())
}

pub fn idempotent_demo_with(
    descriptor: &SemiringDescriptor,
    config: &VerifyConfig,
) -> Result<NonUfdReport, AlgebraError> {
    let one = descriptor.one();
    let two = one.add(&one)?;
    if two.equiv_with(&one, &config.budget)? != Verdict::Equal {
        return Err(AlgebraError::Precondition(format!(
            "{} is not idempotent: 1+1 differs from 1",
            descriptor.id()
        )));
    }
    let axiom_report =
        check_axioms_with(descriptor, config.axiom_seed, config.axiom_samples, &config.budget);
    let linear = poly::binomial(descriptor, 1, &one);
    let quadratic = poly::binomial(descriptor, 2, &one);
    let factorization_a = Factorization::new(one.clone(), vec![linear.clone(), quadratic]);
    let factorization_b =
        Factorization::new(one.clone(), vec![linear.clone(), linear.clone(), linear]);
    let target = Polynomial::from_natural_coeffs(descriptor, &[1, 1, 1, 1]);

    let mut failing: Option<String> = None;
    if !axiom_report.all_passed() {
        failing = Some("axiom-harness".to_owned());
    }
    for (name, fact) in
        [("factorization-a-product", &factorization_a), ("factorization-b-product", &factorization_b)]
    {
        if failing.is_none()
            && fact.product()?.equiv_with(&target, &config.budget)? != Verdict::Equal
        {
            failing = Some(name.to_owned());
        }
    }
    let mut certificates = Vec::new();
    for factor_poly in factorization_a.factors.iter().chain(&factorization_b.factors) {
        let degree = factor_poly.degree().expect("witness factors are nonzero") as u32;
        let certificate = binomial_certificate(descriptor, degree, &factor_poly.coeff(0))?;
        if certificate.verdict != CertVerdict::Irreducible && failing.is_none() {
            failing = Some(format!("certificate:{}", crate::expr::render(factor_poly)));
        }
        certificates.push((factor_poly.clone(), certificate));
    }
    let degree_multisets = (factorization_a.degree_multiset(), factorization_b.degree_multiset());
    if degree_multisets.0 == degree_multisets.1 && failing.is_none() {
        failing = Some("degree-multisets".to_owned());
    }

    let partner = OnePartner { value: one.clone(), inverse: one };
    Ok(NonUfdReport {
        semiring: descriptor.id(),
        case: UfdCase::Partner(partner),
        product: target,
        factorization_a,
        factorization_b,
        certificates,
        degree_multisets,
        verdict: match failing {
            None => TheoremVerdict::NotUfd,
            Some(failing_check) => TheoremVerdict::Inconclusive { failing_check },
        },
        axiom_fingerprint: axiom_report.fingerprint(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::{Element, SemiringKind};

    #[test]
    fn witness_pairs_by_case() {
        let (a, b, case) = witness_pair(&SemiringKind::Nat.descriptor()).unwrap();
        assert_eq!(case, UfdCase::NoPartner);
        assert_eq!(a.degree_multiset(), vec![1, 4]);
        assert_eq!(b.degree_multiset(), vec![2, 3]);

        let (a, b, case) = witness_pair(&SemiringKind::TropicalMinPlus.descriptor()).unwrap();
        assert!(matches!(case, UfdCase::Partner(_)));
        assert_eq!(a.degree_multiset(), vec![1, 2, 2]);
        assert_eq!(b.degree_multiset(), vec![1, 1, 3]);

        let (_, _, case) = witness_pair(&SemiringKind::S0.descriptor()).unwrap();
        let partner = case.partner().unwrap();
        assert_eq!(partner.value, Element::s0_x());
        assert_eq!(partner.inverse, Element::s0_y());
    }

    #[test]
    fn theorem_holds_over_every_registered_semiring() {
        for kind in SemiringKind::all() {
            let report = verify_non_ufd(&kind.descriptor()).unwrap();
            assert!(report.verdict.is_not_ufd(), "{}: {:?}", kind.id(), report.verdict);
            assert_ne!(report.degree_multisets.0, report.degree_multisets.1);
            assert!(report
                .certificates
                .iter()
                .all(|(_, c)| c.verdict == CertVerdict::Irreducible));
        }
    }

    #[test]
    fn case_split_lands_as_expected() {
        for (kind, expect_partner) in [
            (SemiringKind::Nat, false),
            (SemiringKind::NonNegRational, false),
            (SemiringKind::MonoidNat, false),
            (SemiringKind::Boolean, true),
            (SemiringKind::TropicalMinPlus, true),
            (SemiringKind::S0, true),
        ] {
            let report = verify_non_ufd(&kind.descriptor()).unwrap();
            assert_eq!(report.case.partner().is_some(), expect_partner, "{}", kind.id());
        }
        let report = verify_non_ufd(&SemiringKind::Boolean.descriptor()).unwrap();
        assert!(report.case.partner().unwrap().value.is_one());
    }

    #[test]
    fn reports_are_reproducible() {
        let d = SemiringKind::S0.descriptor();
        let a = verify_non_ufd(&d).unwrap();
        let b = verify_non_ufd(&d).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn idempotent_demo_cases() {
        for kind in [SemiringKind::Boolean, SemiringKind::TropicalMinPlus] {
            let report = idempotent_demo(&kind.descriptor()).unwrap();
            assert!(report.verdict.is_not_ufd(), "{}", kind.id());
            assert_eq!(report.degree_multisets, (vec![1, 2], vec![1, 1, 1]));
        }
        assert!(matches!(
            idempotent_demo(&SemiringKind::Nat.descriptor()),
            Err(AlgebraError::Precondition(_))
        ));
    }
}
