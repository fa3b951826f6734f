//! Dense univariate polynomials over a registered semiring.
//!
//! Coefficients are stored ascending, index `i` holding the coefficient
//! of `T^i`, with trailing zeros trimmed; the zero polynomial is the
//! empty sequence and has no degree. All degrees in play are tiny, so a
//! dense representation wins over sparse on simplicity. There is no
//! division and no gcd: semirings have no subtraction and the
//! factorization arguments here never divide.

use crate::error::AlgebraError;
use crate::s0::RewriteBudget;
use crate::semiring::{Element, SemiringDescriptor, SemiringKind, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Polynomial {
    kind: SemiringKind,
    coeffs: Vec<Element>,
}

impl Polynomial {
    pub fn zero(kind: SemiringKind) -> Self {
        Self { kind, coeffs: Vec::new() }
    }

    /// Build from ascending coefficients, validating that they all
    /// belong to the stated semiring; trailing zeros are trimmed.
    pub fn new(kind: SemiringKind, coeffs: Vec<Element>) -> Result<Self, AlgebraError> {
        for c in &coeffs {
            if c.semiring() != kind {
                return Err(AlgebraError::SemiringMismatch {
                    op: "polynomial construction",
                    left: kind.id(),
                    right: c.semiring_id(),
                });
            }
        }
        let mut poly = Self { kind, coeffs };
        poly.trim();
        Ok(poly)
    }

    pub fn constant(value: Element) -> Self {
        let kind = value.semiring();
        let mut poly = Self { kind, coeffs: vec![value] };
        poly.trim();
        poly
    }

    /// `coeff * T^degree`.
    pub fn monomial(coeff: Element, degree: usize) -> Self {
        let kind = coeff.semiring();
        if coeff.is_zero() {
            return Self::zero(kind);
        }
        let descriptor = kind.descriptor();
        let mut coeffs = vec![descriptor.zero(); degree];
        coeffs.push(coeff);
        Self { kind, coeffs }
    }

    /// Polynomial with natural coefficients transported through the
    /// canonical map, ascending order.
    pub fn from_natural_coeffs(descriptor: &SemiringDescriptor, coeffs: &[u64]) -> Self {
        let coeffs = coeffs.iter().map(|&n| descriptor.from_u64(n)).collect();
        let mut poly = Self { kind: descriptor.kind(), coeffs };
        poly.trim();
        poly
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Element::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn semiring(&self) -> SemiringKind {
        self.kind
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    /// Coefficient of `T^i`, zero beyond the stored length.
    pub fn coeff(&self, i: usize) -> Element {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.kind.descriptor().zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Element> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(Element::is_one)
    }

    fn check_kind(&self, other: &Polynomial, op: &'static str) -> Result<(), AlgebraError> {
        if self.kind != other.kind {
            return Err(AlgebraError::SemiringMismatch {
                op,
                left: self.kind.id(),
                right: other.kind.id(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check_kind(other, "poly add")?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            coeffs.push(self.coeff(i).add(&other.coeff(i))?);
        }
        let mut poly = Polynomial { kind: self.kind, coeffs };
        poly.trim();
        Ok(poly)
    }

    /// Convolution product. Over a semiring without zero divisors the
    /// degree of a product of nonzero polynomials is the sum of the
    /// degrees.
    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check_kind(other, "poly mul")?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.kind));
        }
        let descriptor = self.kind.descriptor();
        let mut coeffs = vec![descriptor.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b)?)?;
            }
        }
        let mut poly = Polynomial { kind: self.kind, coeffs };
        poly.trim();
        Ok(poly)
    }

    /// Iterated product; the zeroth power is the constant one.
    pub fn pow(&self, exponent: u32) -> Result<Polynomial, AlgebraError> {
        let mut acc = Polynomial::constant(self.kind.descriptor().one());
        for _ in 0..exponent {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Scale every coefficient by a ring element.
    pub fn scale(&self, factor: &Element) -> Result<Polynomial, AlgebraError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.mul(factor))
            .collect::<Result<Vec<_>, _>>()?;
        let mut poly = Polynomial { kind: self.kind, coeffs };
        poly.trim();
        Ok(poly)
    }

    /// Horner evaluation. Evaluation at a point is a semiring
    /// homomorphism, which the tests use as a cheap independent check on
    /// products.
    pub fn eval(&self, at: &Element) -> Result<Element, AlgebraError> {
        let descriptor = self.kind.descriptor();
        if at.semiring() != self.kind {
            return Err(AlgebraError::SemiringMismatch {
                op: "poly eval",
                left: self.kind.id(),
                right: at.semiring_id(),
            });
        }
        let mut acc = descriptor.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at)?.add(c)?;
        }
        Ok(acc)
    }

    pub fn equiv(&self, other: &Polynomial) -> Result<Verdict, AlgebraError> {
        self.equiv_with(other, &RewriteBudget::default())
    }

    /// Coefficientwise equality. Degrees are exact because trailing
    /// zeros are decidable in every carrier, so a degree mismatch is
    /// `Distinct` even where coefficient equality is budgeted.
    pub fn equiv_with(
        &self,
        other: &Polynomial,
        budget: &RewriteBudget,
    ) -> Result<Verdict, AlgebraError> {
        self.check_kind(other, "poly equiv")?;
        if self.coeffs.len() != other.coeffs.len() {
            return Ok(Verdict::Distinct);
        }
        let mut verdict = Verdict::Equal;
        for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
            verdict = verdict.and(a.equiv_with(b, budget)?);
            if verdict == Verdict::Distinct {
                break;
            }
        }
        Ok(verdict)
    }

    /// Map a natural-coefficient polynomial into another semiring
    /// through the canonical map.
    pub fn transport(&self, target: &SemiringDescriptor) -> Result<Polynomial, AlgebraError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                c.as_nat().map(|n| target.from_natural(n)).ok_or_else(|| {
                    AlgebraError::Precondition(
                        "transport is defined on natural-coefficient polynomials".into(),
                    )
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut poly = Polynomial { kind: target.kind(), coeffs };
        poly.trim();
        Ok(poly)
    }
}

/// Whether `p * q` is the constant one. In a semiring without zero
/// divisors this can only happen for constant units, which is what makes
/// degree arguments work: two irreducible polynomials of different
/// degree can never differ by a unit. Errors when the product's equality
/// to one is undetermined.
pub fn units_check(p: &Polynomial, q: &Polynomial) -> Result<bool, AlgebraError> {
    let product = p.mul(q)?;
    let one = Polynomial::constant(p.semiring().descriptor().one());
    match product.equiv(&one)? {
        Verdict::Equal => Ok(true),
        Verdict::Distinct => Ok(false),
        Verdict::Unknown => Err(AlgebraError::Precondition(
            "unit check undetermined within the rewrite budget".into(),
        )),
    }
}

/// `T^n + a`.
pub fn binomial(descriptor: &SemiringDescriptor, n: usize, a: &Element) -> Polynomial {
    let one = descriptor.one();
    let mut coeffs = vec![descriptor.zero(); n + 1];
    coeffs[0] = a.clone();
    coeffs[n] = one;
    let mut poly = Polynomial { kind: descriptor.kind(), coeffs };
    poly.trim();
    poly
}

/// `T^5+T^4+T^3+T^2+T+1`, the polynomial whose two factorizations
/// drive the verifier.
pub fn sextic_target(descriptor: &SemiringDescriptor) -> Polynomial {
    Polynomial::from_natural_coeffs(descriptor, &[1, 1, 1, 1, 1, 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::Tropical;
    use crate::rng::SplitMix64;
    use crate::semiring::UnitStatus;

    fn nat_descriptor() -> SemiringDescriptor {
        SemiringKind::Nat.descriptor()
    }

    fn nat_poly(coeffs: &[u64]) -> Polynomial {
        Polynomial::from_natural_coeffs(&nat_descriptor(), coeffs)
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = nat_poly(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(nat_poly(&[0, 0]).is_zero());
        assert_eq!(nat_poly(&[]).degree(), None);
    }

    #[test]
    fn addition_examples() {
        let sum = nat_poly(&[1, 1]).add(&nat_poly(&[1, 0, 1])).unwrap();
        assert_eq!(sum, nat_poly(&[2, 1, 1]));

        let boolean = SemiringKind::Boolean.descriptor();
        let t_plus_1 = Polynomial::from_natural_coeffs(&boolean, &[1, 1]);
        assert_eq!(t_plus_1.add(&t_plus_1).unwrap(), t_plus_1);

        let p = nat_poly(&[3, 0, 2]);
        assert_eq!(p.add(&Polynomial::zero(SemiringKind::Nat)).unwrap(), p);
    }

    #[test]
    fn the_sextic_identity_over_naturals() {
        let lhs = nat_poly(&[1, 1]).mul(&nat_poly(&[1, 0, 1, 0, 1])).unwrap();
        assert_eq!(lhs, nat_poly(&[1, 1, 1, 1, 1, 1]));
        let rhs = nat_poly(&[1, 0, 0, 1]).mul(&nat_poly(&[1, 1, 1])).unwrap();
        assert_eq!(rhs, nat_poly(&[1, 1, 1, 1, 1, 1]));
        assert_eq!(lhs.equiv(&rhs).unwrap(), Verdict::Equal);
    }

    #[test]
    fn idempotent_cube_collapses() {
        let boolean = SemiringKind::Boolean.descriptor();
        let t_plus_1 = Polynomial::from_natural_coeffs(&boolean, &[1, 1]);
        let cube = t_plus_1.pow(3).unwrap();
        assert_eq!(cube, Polynomial::from_natural_coeffs(&boolean, &[1, 1, 1, 1]));
    }

    #[test]
    fn pow_basics() {
        let p = nat_poly(&[1, 1]);
        assert_eq!(p.pow(1).unwrap(), p);
        assert_eq!(p.pow(2).unwrap(), nat_poly(&[1, 2, 1]));
        assert_eq!(p.pow(0).unwrap(), nat_poly(&[1]));
    }

    #[test]
    fn evaluation_examples() {
        let target = sextic_target(&nat_descriptor());
        assert_eq!(target.eval(&Element::natural(1u32)).unwrap(), Element::natural(6u32));

        let two = Element::natural(2u32);
        let lhs = nat_poly(&[1, 1]).mul(&nat_poly(&[1, 0, 1, 0, 1])).unwrap();
        assert_eq!(lhs.eval(&two).unwrap(), Element::natural(63u32));
        let rhs = nat_poly(&[1, 0, 0, 1]).mul(&nat_poly(&[1, 1, 1])).unwrap();
        assert_eq!(rhs.eval(&two).unwrap(), Element::natural(63u32));

        let zero = Polynomial::zero(SemiringKind::Nat);
        assert!(zero.eval(&two).unwrap().is_zero());
    }

    #[test]
    fn equiv_over_presented_semiring() {
        let s0 = SemiringKind::S0.descriptor();
        let quadratic = Polynomial::new(
            SemiringKind::S0,
            vec![
                Element::s0_x().mul(&Element::s0_y()).unwrap(),
                Element::s0_x().add(&Element::s0_y()).unwrap(),
                s0.one(),
            ],
        )
        .unwrap();
        let plain = Polynomial::from_natural_coeffs(&s0, &[1, 1, 1]);
        assert_eq!(quadratic.equiv(&plain).unwrap(), Verdict::Equal);
    }

    #[test]
    fn degree_mismatch_is_distinct() {
        let t = nat_poly(&[0, 1]);
        let t2 = nat_poly(&[0, 0, 1]);
        assert_eq!(t.equiv(&t2).unwrap(), Verdict::Distinct);
    }

    #[test]
    fn units_check_examples() {
        let one = nat_poly(&[1]);
        assert!(units_check(&one, &one).unwrap());

        let trop = SemiringKind::TropicalMinPlus.descriptor();
        let c3 = Polynomial::constant(Element::tropical(Tropical::from_integer(3)));
        let c_neg3 = Polynomial::constant(Element::tropical(Tropical::from_integer(-3)));
        assert!(units_check(&c3, &c_neg3).unwrap());
        let _ = trop;

        let mut rng = SplitMix64::new(2);
        let t_plus_1 = nat_poly(&[1, 1]);
        for _ in 0..100 {
            let degree = rng.below(4) as usize;
            let coeffs: Vec<u64> = (0..=degree).map(|_| rng.below(5)).collect();
            let q = nat_poly(&coeffs);
            if q.is_zero() {
                continue;
            }
            assert!(!units_check(&t_plus_1, &q).unwrap());
        }
    }

    #[test]
    fn degree_additivity_on_samples() {
        for kind in SemiringKind::all() {
            let d = kind.descriptor();
            let mut rng = SplitMix64::new(31);
            for _ in 0..100 {
                let p = random_poly(&d, &mut rng);
                let q = random_poly(&d, &mut rng);
                if p.is_zero() || q.is_zero() {
                    continue;
                }
                let product = p.mul(&q).unwrap();
                assert_eq!(
                    product.degree(),
                    Some(p.degree().unwrap() + q.degree().unwrap()),
                    "{}",
                    d.id()
                );
            }
        }
    }

    /// Equality assertion that stays honest about the budgeted word
    /// problem: over the presented semiring deep products can come back
    /// `Unknown`, in which case soundness (never `Distinct`) plus exact
    /// agreement of the separator images is what can be checked.
    fn assert_elements_equal(d: &SemiringDescriptor, lhs: &Element, rhs: &Element) {
        if d.kind() == SemiringKind::S0 {
            let budget = RewriteBudget { max_nodes: 5_000, max_depth: 10 };
            let verdict = lhs.equiv_with(rhs, &budget).unwrap();
            assert_ne!(verdict, Verdict::Distinct);
            assert_eq!(
                lhs.as_s0().unwrap().image(),
                rhs.as_s0().unwrap().image(),
                "separator images must agree"
            );
        } else {
            assert_eq!(lhs.equiv(rhs).unwrap(), Verdict::Equal, "{}", d.id());
        }
    }

    fn assert_polys_equal(d: &SemiringDescriptor, lhs: &Polynomial, rhs: &Polynomial) {
        if d.kind() == SemiringKind::S0 {
            let budget = RewriteBudget { max_nodes: 5_000, max_depth: 10 };
            let verdict = lhs.equiv_with(rhs, &budget).unwrap();
            assert_ne!(verdict, Verdict::Distinct);
            assert_eq!(lhs.coeffs().len(), rhs.coeffs().len());
            for (a, b) in lhs.coeffs().iter().zip(rhs.coeffs()) {
                assert_eq!(a.as_s0().unwrap().image(), b.as_s0().unwrap().image());
            }
        } else {
            assert_eq!(lhs.equiv(rhs).unwrap(), Verdict::Equal, "{}", d.id());
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism_on_samples() {
        for kind in SemiringKind::all() {
            let d = kind.descriptor();
            let mut rng = SplitMix64::new(37);
            for _ in 0..60 {
                let p = random_poly(&d, &mut rng);
                let q = random_poly(&d, &mut rng);
                let v = d.sample(&mut rng);
                let sum_eval = p.add(&q).unwrap().eval(&v).unwrap();
                let eval_sum = p.eval(&v).unwrap().add(&q.eval(&v).unwrap()).unwrap();
                assert_elements_equal(&d, &sum_eval, &eval_sum);
                let mul_eval = p.mul(&q).unwrap().eval(&v).unwrap();
                let eval_mul = p.eval(&v).unwrap().mul(&q.eval(&v).unwrap()).unwrap();
                assert_elements_equal(&d, &mul_eval, &eval_mul);
            }
        }
    }

    #[test]
    fn transport_carries_the_identity_everywhere() {
        let lhs = nat_poly(&[1, 1]).mul(&nat_poly(&[1, 0, 1, 0, 1])).unwrap();
        let rhs = nat_poly(&[1, 0, 0, 1]).mul(&nat_poly(&[1, 1, 1])).unwrap();
        for kind in SemiringKind::all() {
            let d = kind.descriptor();
            let a = lhs.transport(&d).unwrap();
            let b = rhs.transport(&d).unwrap();
            assert_eq!(a.equiv(&b).unwrap(), Verdict::Equal, "{}", d.id());
        }
    }

    #[test]
    fn ring_like_laws_on_samples() {
        for kind in SemiringKind::all() {
            let d = kind.descriptor();
            let mut rng = SplitMix64::new(41);
            for _ in 0..40 {
                let p = random_poly(&d, &mut rng);
                let q = random_poly(&d, &mut rng);
                let r = random_poly(&d, &mut rng);
                let pq = p.mul(&q).unwrap();
                let qp = q.mul(&p).unwrap();
                assert_eq!(pq.equiv(&qp).unwrap(), Verdict::Equal);
                let left = pq.mul(&r).unwrap();
                let right = p.mul(&q.mul(&r).unwrap()).unwrap();
                assert_polys_equal(&d, &left, &right);
                let dist_l = p.mul(&q.add(&r).unwrap()).unwrap();
                let dist_r = p.mul(&q).unwrap().add(&p.mul(&r).unwrap()).unwrap();
                assert_polys_equal(&d, &dist_l, &dist_r);
            }
        }
    }

    #[test]
    fn scaling_by_a_unit_is_invertible() {
        let trop = SemiringKind::TropicalMinPlus.descriptor();
        let p = Polynomial::from_natural_coeffs(&trop, &[1, 1, 1]);
        let u = Element::tropical(Tropical::from_integer(5));
        let UnitStatus::Unit(inv) = u.unit_status() else { panic!("finite is a unit") };
        let back = p.scale(&u).unwrap().scale(&inv).unwrap();
        assert_eq!(back.equiv(&p).unwrap(), Verdict::Equal);
    }

    pub(super) fn random_poly(d: &SemiringDescriptor, rng: &mut SplitMix64) -> Polynomial {
        if rng.below(10) == 0 {
            return Polynomial::zero(d.kind());
        }
        let degree = rng.below(5) as usize;
        let coeffs = (0..=degree).map(|_| d.sample(rng)).collect();
        Polynomial::new(d.kind(), coeffs).unwrap()
    }
}
