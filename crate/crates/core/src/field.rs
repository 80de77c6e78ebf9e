//! The scalar abstraction: exact field elements.
//!
//! Everything downstream (polynomials, rational functions, the content
//! valuation) is generic over [`Field`], so the same code runs over ℚ,
//! over ℚ(√d), and over ℚ(X). Concrete aliases live at the crate root.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::Rational;

/// An exact field element.
///
/// Division by zero panics, matching the underlying `num` types; callers
/// guard it. Equality is exact structural equality of canonical forms.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// Multiplicative inverse, or `None` for zero.
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }

    /// Exact integer power, with negative exponents via inversion.
    ///
    /// Panics on `0^n` for `n < 0`.
    fn powi(&self, exp: i64) -> Self {
        if exp == 0 {
            return Self::one();
        }
        let base = if exp < 0 {
            self.inverse().expect("zero has no negative power")
        } else {
            self.clone()
        };
        let mut acc = Self::one();
        for _ in 0..exp.unsigned_abs() {
            acc = acc * base.clone();
        }
        acc
    }
}

impl Field for Rational {}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    #[test]
    fn rational_powers() {
        let half = Rational::from_f64(0.5).unwrap();
        assert_eq!(half.powi(-2), Rational::from_integer(4.into()));
        assert_eq!(half.powi(0), Rational::one());
        assert_eq!(half.powi(3), Rational::new(1.into(), 8.into()));
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(Rational::zero().inverse(), None);
    }
}
