//! Sampled axiom harness.
//!
//! The carriers are infinite, so the laws are property-checked on
//! sampled tuples rather than proved: associativity, commutativity and
//! identity of both operations, absorption by zero, distributivity,
//! strictness (a sum is zero only when both summands are) and freedom
//! from zero divisors. Runs are deterministic for a fixed seed, and
//! every report carries a stable fingerprint so downstream claims can
//! point back at the exact run that backs them.

use crate::rng::SplitMix64;
use crate::s0::RewriteBudget;
use crate::semiring::{SemiringDescriptor, Verdict};

pub const CHECK_NAMES: [&str; 10] = [
    "add-commutative",
    "add-associative",
    "add-identity",
    "mul-commutative",
    "mul-associative",
    "mul-identity",
    "zero-absorbs",
    "mul-distributes-over-add",
    "strict",
    "no-zero-divisors",
];

/// Tally for one law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub passed: u64,
    pub failed: u64,
    pub unknown: u64,
}

impl AxiomCheck {
    fn new(name: &'static str) -> Self {
        Self { name, passed: 0, failed: 0, unknown: 0 }
    }

    fn record(&mut self, verdict: Verdict) {
        match verdict {
            Verdict::Equal => self.passed += 1,
            Verdict::Distinct => self.failed += 1,
            Verdict::Unknown => self.unknown += 1,
        }
    }
}

/// Result of one harness run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub semiring: &'static str,
    pub seed: u64,
    pub samples: u32,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.failed == 0)
    }

    pub fn unknown_total(&self) -> u64 {
        self.checks.iter().map(|c| c.unknown).sum()
    }

    /// Stable FNV-1a fingerprint of the full tally.
    pub fn fingerprint(&self) -> String {
        let mut hash: u64 = 0xCBF2_9CE4_8422_2325;
        let mut eat = |bytes: &[u8]| {
            for &b in bytes {
                hash ^= u64::from(b);
                hash = hash.wrapping_mul(0x0000_0100_0000_01B3);
            }
        };
        eat(self.semiring.as_bytes());
        eat(&self.seed.to_le_bytes());
        eat(&self.samples.to_le_bytes());
        for check in &self.checks {
            eat(check.name.as_bytes());
            eat(&check.passed.to_le_bytes());
            eat(&check.failed.to_le_bytes());
            eat(&check.unknown.to_le_bytes());
        }
        format!("{hash:016x}")
    }
}

/// Run the harness with the default rewrite budget.
pub fn check_axioms(descriptor: &SemiringDescriptor, seed: u64, samples: u32) -> AxiomReport {
    check_axioms_with(descriptor, seed, samples, &RewriteBudget::default())
}

/// Run the harness; `samples` tuples are drawn from the descriptor's
/// sampler, deterministically in `seed`.
pub fn check_axioms_with(
    descriptor: &SemiringDescriptor,
    seed: u64,
    samples: u32,
    budget: &RewriteBudget,
) -> AxiomReport {
    assert!(samples >= 1, "at least one sample required");
    let mut rng = SplitMix64::new(seed);
    let mut checks: Vec<AxiomCheck> = CHECK_NAMES.iter().map(|n| AxiomCheck::new(n)).collect();
    let zero = descriptor.zero();
    let one = descriptor.one();

    for _ in 0..samples {
        let a = descriptor.sample(&mut rng);
        let b = descriptor.sample(&mut rng);
        let c = descriptor.sample(&mut rng);

        let eq = |x: &crate::semiring::Element, y: &crate::semiring::Element| {
            x.equiv_with(y, budget).expect("samples share a semiring")
        };

        let ab = a.add(&b).unwrap();
        let ba = b.add(&a).unwrap();
        checks[0].record(eq(&ab, &ba));

        let ab_c = ab.add(&c).unwrap();
        let a_bc = a.add(&b.add(&c).unwrap()).unwrap();
        checks[1].record(eq(&ab_c, &a_bc));

        checks[2].record(eq(&a.add(&zero).unwrap(), &a));

        let axb = a.mul(&b).unwrap();
        let bxa = b.mul(&a).unwrap();
        checks[3].record(eq(&axb, &bxa));

        let abc = axb.mul(&c).unwrap();
        let a_bc_mul = a.mul(&b.mul(&c).unwrap()).unwrap();
        checks[4].record(eq(&abc, &a_bc_mul));

        checks[5].record(eq(&a.mul(&one).unwrap(), &a));

        checks[6].record(eq(&a.mul(&zero).unwrap(), &zero));

        let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
        let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        checks[7].record(eq(&lhs, &rhs));

        // Strictness: when a + b = 0, both a and b must be 0. The check
        // is vacuously satisfied when the sum is nonzero.
        checks[8].record(match eq(&ab, &zero) {
            Verdict::Equal => eq(&a, &zero).and(eq(&b, &zero)),
            Verdict::Distinct => Verdict::Equal,
            Verdict::Unknown => Verdict::Unknown,
        });

        // Zero divisors: when a * b = 0, one factor must be 0.
        checks[9].record(match eq(&axb, &zero) {
            Verdict::Equal => match (eq(&a, &zero), eq(&b, &zero)) {
                (Verdict::Equal, _) | (_, Verdict::Equal) => Verdict::Equal,
                (Verdict::Unknown, _) | (_, Verdict::Unknown) => Verdict::Unknown,
                _ => Verdict::Distinct,
            },
            Verdict::Distinct => Verdict::Equal,
            Verdict::Unknown => Verdict::Unknown,
        });
    }

    AxiomReport { semiring: descriptor.id(), seed, samples, checks }
}
