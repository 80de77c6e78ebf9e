//! Dense univariate polynomials over an exact field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::Rational;

/// Coefficients ascend by degree; the vector is empty for the zero
/// polynomial and its last entry is nonzero otherwise.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<K> {
    coeffs: Vec<K>,
}

impl<K: Field> Polynomial<K> {
    fn normalized(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial { coeffs: vec![K::one()] }
    }

    pub fn constant(c: K) -> Self {
        Self::normalized(vec![c])
    }

    /// The indeterminate X.
    pub fn x() -> Self {
        Polynomial { coeffs: vec![K::zero(), K::one()] }
    }

    pub fn monomial(c: K, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![K::zero(); degree + 1];
        coeffs[degree] = c;
        Polynomial { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<K>) -> Self {
        Self::normalized(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(K::zero)
    }

    pub fn scale(&self, c: &K) -> Self {
        Self::normalized(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiply by X^h.
    pub fn shift_up(&self, h: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![K::zero(); h];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.inverse().expect("leading coefficient is nonzero")),
        }
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| {
                let mut acc = K::zero();
                for _ in 0..i {
                    acc = acc + c.clone();
                }
                acc
            })
            .collect();
        Self::normalized(coeffs)
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = K::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact Euclidean division: (quotient, remainder) with
    /// deg r < deg divisor.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let Some(d_deg) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let d_lc_inv = divisor
            .leading()
            .unwrap()
            .inverse()
            .expect("leading coefficient is nonzero");
        let mut rem = self.clone();
        let mut quot = vec![K::zero(); self.coeffs.len().saturating_sub(d_deg)];
        while let Some(r_deg) = rem.degree() {
            if r_deg < d_deg {
                break;
            }
            let factor = rem.leading().unwrap().clone() * d_lc_inv.clone();
            let shift = r_deg - d_deg;
            quot[shift] = factor.clone();
            let sub = divisor.shift_up(shift).scale(&factor);
            rem = &rem - &sub;
        }
        Ok((Self::normalized(quot), rem))
    }

    /// Monic gcd by the Euclidean algorithm; gcd(f, 0) = monic(f).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("divisor is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// True iff `divisor` divides exactly.
    pub fn divisible_by(&self, divisor: &Self) -> bool {
        match self.div_rem(divisor) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }
}

impl<K: Field> Add for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn add(self, rhs: &Polynomial<K>) -> Polynomial<K> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Polynomial::normalized(out)
    }
}

impl<K: Field> Sub for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn sub(self, rhs: &Polynomial<K>) -> Polynomial<K> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        Polynomial::normalized(out)
    }
}

impl<K: Field> Neg for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn neg(self) -> Polynomial<K> {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<K: Field> Mul for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn mul(self, rhs: &Polynomial<K>) -> Polynomial<K> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![K::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::normalized(out)
    }
}

impl Polynomial<Rational> {
    /// Convenience constructor from machine integers, ascending by degree.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }
}

/// True iff the rendering is a bare rational literal (no operators), so a
/// coefficient can appear unparenthesized inside a term.
fn simple_atom(s: &str) -> bool {
    let body = s.strip_prefix('-').unwrap_or(s);
    !body.is_empty()
        && body
            .chars()
            .all(|c| c.is_ascii_digit() || c == '/')
}

impl<K: Field> fmt::Display for Polynomial<K> {
    /// Canonical compact form in the expression grammar, highest degree
    /// first: `X^2+2`, `2*X+(1+sqrt(-5))`, `X^3-2*X+5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let rendered = c.to_string();
            let (sign, mag) = if simple_atom(&rendered) {
                match rendered.strip_prefix('-') {
                    Some(body) => ('-', body.to_string()),
                    None => ('+', rendered),
                }
            } else {
                ('+', format!("({rendered})"))
            };
            if first {
                if sign == '-' {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{sign}")?;
            }
            match deg {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != "1" {
                        write!(f, "{mag}*")?;
                    }
                    if deg == 1 {
                        write!(f, "X")?;
                    } else {
                        write!(f, "X^{deg}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
