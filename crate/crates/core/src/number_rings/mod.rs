//! Concrete fields and their divisor valuations: ℚ with the
//! prime-factorization valuation, and quadratic fields ℚ(√d) with the
//! prime-ideal valuation of ℤ[√d], including fractional-ideal arithmetic
//! in Hermite normal form.

mod factor;
mod ideal;
mod quad;
mod rational;
mod valuation;

pub use factor::{divisors, factor_integer, DEFAULT_FACTOR_BOUND};
pub use ideal::{is_principal_search, QuadIdeal};
pub use quad::{QuadContext, QuadElement};
pub use rational::{rational_gcd_combiner, rational_valuation, RationalDivisorValuation};
pub use valuation::{
    ideal_from_valuation, label_norm, prime_ideal_of_label, prime_ideal_valuation,
    quad_divisor_valuation, quad_splitting_type, QuadDivisorValuation,
};
