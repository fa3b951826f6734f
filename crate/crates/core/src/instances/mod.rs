//! Concrete exact carriers for the built-in semirings.
//!
//! Each submodule owns one payload representation together with its
//! arithmetic, canonicalization, unit procedure, and sampler. The
//! dispatching `Element` type lives in [`crate::semiring`].
//!
//! Real-number carriers are realized as their rational sub-semirings so
//! that equality stays exact and decidable; floating point would break
//! associativity and equality testing, while none of the factorization
//! arguments here needs irrational values.

pub mod boolean;
pub mod monoid;
pub mod nat;
pub mod rational;
pub mod tropical;

pub use monoid::MonoidNat;
pub use tropical::Tropical;
