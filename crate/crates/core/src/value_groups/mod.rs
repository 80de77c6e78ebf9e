//! Lattice-ordered value groups of the form ⊕ᵢℤ.
//!
//! Elements are finitely supported exponent vectors indexed by
//! [`PrimeLabel`]s, ordered componentwise. Every pair has a meet
//! (componentwise min) and join (componentwise max), and a formal
//! [`ExtendedValue::Infinity`] sits above everything as the value of zero.

mod label;
mod vector;

pub use label::{is_prime_u64, LabelPoly, PrimeLabel, QuadPrimeKind};
pub use vector::{minimal_in_set, ExtendedValue, OrderingResult, ValueVector};
