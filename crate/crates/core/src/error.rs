//! Error type shared by the library modules.

use thiserror::Error;

/// Errors produced by the exact-arithmetic operations.
///
/// Failed *checks* (an axiom violation, a false membership) are ordinary
/// data, not errors; this type covers genuine failure to compute.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Trial division gave up: some cofactor has no certified prime
    /// factorization within the configured bound.
    #[error("factorization exceeds bound {bound}: cofactor {cofactor} unresolved")]
    FactorBoundExceeded { bound: u64, cofactor: String },

    /// A polynomial exceeded the configured factorization degree bound.
    #[error("polynomial degree {degree} exceeds factorization bound {bound}")]
    DegreeBoundExceeded { degree: usize, bound: usize },

    /// A valuation has no irreducible representative for a support label.
    #[error("no irreducible representative for label {label}")]
    MissingRepresentative { label: String },

    /// A label string or label constructor argument was malformed.
    #[error("invalid label: {0}")]
    InvalidLabel(String),

    /// The zero ideal has no Hermite normal form and no inverse.
    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,

    /// A quadratic context was rejected at construction.
    #[error("invalid quadratic context: {0}")]
    InvalidContext(String),

    /// A combiner handed back a Bézout certificate that fails verification.
    #[error("invalid Bézout certificate for pair ({x}, {y}): {reason}")]
    InvalidCertificate { x: String, y: String, reason: String },

    /// Division by zero in exact field arithmetic.
    #[error("division by zero")]
    DivisionByZero,

    /// Catch-all for violated preconditions.
    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
