//! Polynomials and rational functions over a valued base field: the
//! content valuation w, the Kronecker function ring R(w), factorization
//! over ℚ[X], and the valuations t and u on ℚ(X).

pub mod content;
mod factor;
mod kronecker_ring;
mod poly;
mod ratfunc;
mod tu;

pub use content::{
    bezout_coefficients, content_value, kronecker_ring_member, w_value, ContentValuation,
};
pub use factor::{kronecker_factor, FactorizationResult, DEFAULT_DEGREE_BOUND};
pub use kronecker_ring::{
    coefficient_cofactors, contract_ideal, extend_contract_roundtrip_check, extend_ideal,
    polynomial_with_same_value, rw_ideal_equal, rw_principal_generator, FoldStep, IdealToolkit,
    KroneckerRingIdeal, QuadIdealToolkit, RationalIdealToolkit, RwPrincipalGenerator,
};
pub use poly::Polynomial;
pub use ratfunc::RationalFunction;
pub use tu::{
    basis_witness, is_integer_polynomial, t_value, u_member, u_value, TValuation, UValuation,
};
