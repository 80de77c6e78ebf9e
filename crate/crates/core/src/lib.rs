//! Exact-arithmetic demi-valuations (generalized valuations into
//! lattice-ordered abelian groups) over concrete rings.
//!
//! The crate provides:
//!
//! * [`value_groups`]: finitely supported exponent vectors in a direct sum
//!   of copies of ℤ, with componentwise partial order, meet/join, and the
//!   formal infinity assigned to the valuation of zero;
//! * [`valuation_core`]: the demi-valuation contract, axiom checkers, the
//!   Bézout property, and principal-generator construction by certificate
//!   folding;
//! * [`number_rings`]: ℚ with its prime-factorization divisor valuation,
//!   and quadratic fields ℚ(√d) with prime-ideal divisor valuations and
//!   fractional-ideal arithmetic in Hermite normal form;
//! * [`function_field`]: polynomials and rational functions over a valued
//!   base field, the content valuation `w`, the Kronecker function ring
//!   R(w) with its Bézout construction and ideal correspondence, the
//!   factorization valuation `t` over ℚ(X), and the paired valuation `u`;
//! * [`expr`] and [`cli`]: the expression grammar and the `demival`
//!   command-line front end;
//! * [`suites`]: the seeded property suites behind `demival check`.
//!
//! All arithmetic is exact: integers and rationals are arbitrary precision,
//! and every stated law is tested with zero tolerance.

pub mod cli;
pub mod error;
pub mod expr;
pub mod field;
pub mod function_field;
pub mod number_rings;
pub mod suites;
pub mod valuation_core;
pub mod value_groups;

/// Exact arbitrary-precision rational number, the element type of ℚ.
pub type Rational = num_rational::BigRational;

/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;

/// Dense univariate polynomial over ℚ.
pub type RatPoly = function_field::Polynomial<Rational>;

/// Reduced quotient of two polynomials over ℚ, an element of ℚ(X).
pub type RatFunc = function_field::RationalFunction<Rational>;

/// Dense univariate polynomial over a quadratic field ℚ(√d).
pub type QuadPoly = function_field::Polynomial<number_rings::QuadElement>;

/// Element of ℚ(√d)(X).
pub type QuadFunc = function_field::RationalFunction<number_rings::QuadElement>;

pub use error::Error;
