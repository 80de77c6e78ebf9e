//! Reduced rational functions p/q over an exact field: elements of K(X).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::function_field::Polynomial;

/// Invariants: the denominator is nonzero and monic, and
/// gcd(numerator, denominator) = 1, so equality is structural.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalFunction<K> {
    num: Polynomial<K>,
    den: Polynomial<K>,
}

impl<K: Field> RationalFunction<K> {
    pub fn new(num: Polynomial<K>, den: Polynomial<K>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Polynomial<K>, den: Polynomial<K>) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RationalFunction { num, den: Polynomial::one() };
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g).expect("gcd is nonzero");
        let (den, _) = den.div_rem(&g).expect("gcd is nonzero");
        let lc_inv = den
            .leading()
            .expect("denominator is nonzero")
            .inverse()
            .expect("leading coefficient is nonzero");
        RationalFunction { num: num.scale(&lc_inv), den: den.scale(&lc_inv) }
    }

    pub fn from_poly(p: Polynomial<K>) -> Self {
        RationalFunction { num: p, den: Polynomial::one() }
    }

    pub fn constant(c: K) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn x() -> Self {
        Self::from_poly(Polynomial::x())
    }

    pub fn numerator(&self) -> &Polynomial<K> {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial<K> {
        &self.den
    }

    /// The polynomial itself when the denominator is 1.
    pub fn as_polynomial(&self) -> Option<&Polynomial<K>> {
        self.den.is_one().then_some(&self.num)
    }

    /// The constant when both numerator and denominator have degree ≤ 0.
    pub fn as_constant(&self) -> Option<K> {
        if self.num.is_constant() && self.den.is_constant() && !self.den.is_zero() {
            Some(self.num.coeff(0) / self.den.coeff(0))
        } else {
            None
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }
}

impl<K: Field> Add for RationalFunction<K> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        Self::reduced(num, den)
    }
}

impl<K: Field> Sub for RationalFunction<K> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        Self::reduced(num, den)
    }
}

impl<K: Field> Neg for RationalFunction<K> {
    type Output = Self;
    fn neg(self) -> Self {
        RationalFunction { num: -&self.num, den: self.den }
    }
}

impl<K: Field> Mul for RationalFunction<K> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<K: Field> Div for RationalFunction<K> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        Self::reduced(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl<K: Field> Zero for RationalFunction<K> {
    fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<K: Field> One for RationalFunction<K> {
    fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl<K: Field> Field for RationalFunction<K> {}

impl<K: Field> fmt::Display for RationalFunction<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn poly(coeffs: &[i64]) -> Polynomial<Rational> {
        Polynomial::from_i64(coeffs)
    }

    #[test]
    fn reduction_is_canonical() {
        // (2X+2)/(2X+4) reduces to (X+1)/(X+2).
        let f = RationalFunction::new(poly(&[2, 2]), poly(&[4, 2])).unwrap();
        assert_eq!(f.numerator(), &poly(&[1, 1]));
        assert_eq!(f.denominator(), &poly(&[2, 1]));

        // Equal fractions compare equal regardless of presentation.
        let g = RationalFunction::new(poly(&[1, 1]), poly(&[2, 1])).unwrap();
        assert_eq!(f, g);

        assert!(RationalFunction::new(poly(&[1]), poly(&[])).is_err());
    }

    #[test]
    fn field_arithmetic() {
        let x = RationalFunction::<Rational>::x();
        let one = RationalFunction::<Rational>::one();
        let f = (x.clone() + one.clone()) / x.clone(); // (X+1)/X
        let back = f.clone() * x.clone() - one.clone();
        assert_eq!(back, x.clone());
        assert!((f.clone() - f).is_zero());
    }

    #[test]
    fn display_forms() {
        let f = RationalFunction::new(poly(&[2]), poly(&[4, 2])).unwrap();
        assert_eq!(f.to_string(), "(1)/(X+2)");
        let p = RationalFunction::from_poly(poly(&[2, 0, 1]));
        assert_eq!(p.to_string(), "X^2+2");
    }
}
