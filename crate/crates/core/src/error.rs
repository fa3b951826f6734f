//! Error type shared by the algebra modules.

use thiserror::Error;

/// Errors raised by semiring, polynomial, and factorization operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// Two operands belong to different semirings; there is no implicit
    /// coercion between carriers.
    #[error("semiring mismatch in {op}: {left} vs {right}")]
    SemiringMismatch {
        op: &'static str,
        left: &'static str,
        right: &'static str,
    },

    /// A semiring id was registered twice.
    #[error("duplicate semiring id {0:?}")]
    DuplicateSemiring(String),

    /// No semiring with the given id is registered.
    #[error("unknown semiring id {0:?}")]
    UnknownSemiring(String),

    /// The semiring lacks a capability the operation requires.
    #[error("semiring {semiring:?} does not support {operation}")]
    Unsupported {
        semiring: &'static str,
        operation: String,
    },

    /// A documented precondition was violated by the caller.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An internal invariant failed; this indicates a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
