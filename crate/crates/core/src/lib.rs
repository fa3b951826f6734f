//! Exact polynomial algebra over commutative semirings.
//!
//! This crate implements arithmetic in `R[T]` for a registry of exact
//! semirings `R`, together with the machinery needed to certify that
//! unique factorization fails in every one of them:
//!
//! - [`semiring`]: the semiring abstraction, with tagged elements, a registry
//!   of instances, the canonical map from the naturals, unit search, and
//!   a sampled axiom-checking harness.
//! - [`instances`]: the concrete carriers, namely naturals, nonnegative
//!   rationals, the Boolean semiring, the tropical min-plus semifield,
//!   and the monoid semiring of natural combinations of positive
//!   rationals.
//! - [`s0`]: the finitely presented semiring generated by `x`, `y`
//!   subject to `x*y = 1` and `x + y = 1`, with budgeted congruence
//!   testing by term rewriting and a separating homomorphism into the
//!   Eisenstein integers.
//! - [`poly`]: dense univariate polynomials over any registered
//!   semiring.
//! - [`factor`]: irreducibility certificates, an exhaustive
//!   factorization oracle for enumerable coefficient semirings, and
//!   factorization equivalence up to units and order.
//! - [`theorem`]: the end-to-end verifier that builds two inequivalent
//!   irreducible factorizations of `T^5+T^4+T^3+T^2+T+1` over a chosen
//!   semiring.
//! - [`expr`]: parser and printer for polynomial expressions.
//!
//! All values are immutable and all operations are pure, so everything
//! here is safe to use from multiple threads.

pub mod error;
pub mod expr;
pub mod factor;
pub mod instances;
pub mod poly;
pub mod rng;
pub mod s0;
pub mod semiring;
pub mod theorem;

pub use error::AlgebraError;
pub use poly::Polynomial;
pub use semiring::{
    Capabilities, Element, OnePartner, Registry, SemiringDescriptor, SemiringKind, UnitStatus,
    Verdict,
};
