//! Quadratic fields ℚ(√d) with exact arithmetic.
//!
//! Restricted to squarefree d ≡ 2, 3 (mod 4), so the ring of integers is
//! exactly ℤ[√d] and ideals have a 2-dimensional Hermite normal form over
//! the basis (1, √d). Rational constants are context-free: they live in
//! every ℚ(√d), so they carry no d until mixed with a genuine √d term.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::Rational;

/// The field ℚ(√d) for squarefree d ≢ 0, 1 with d ≡ 2 or 3 (mod 4).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadContext {
    d: i64,
}

impl QuadContext {
    pub fn new(d: i64) -> Result<Self> {
        if d == 0 || d == 1 {
            return Err(Error::InvalidContext(format!("d = {d} is not allowed")));
        }
        match d.rem_euclid(4) {
            2 | 3 => {}
            r => {
                return Err(Error::InvalidContext(format!(
                    "d = {d} ≡ {r} (mod 4); only d ≡ 2, 3 (mod 4) keep the ring of \
                     integers equal to Z[sqrt(d)]"
                )))
            }
        }
        // Squarefree by trial division.
        let abs = d.unsigned_abs();
        let mut p = 2u64;
        while p * p <= abs {
            if abs.is_multiple_of(p * p) {
                return Err(Error::InvalidContext(format!(
                    "d = {d} is divisible by {p}^2; d must be squarefree"
                )));
            }
            p += 1;
        }
        Ok(QuadContext { d })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// The element a + b·√d.
    pub fn element(&self, a: Rational, b: Rational) -> QuadElement {
        QuadElement::new(Some(*self), a, b)
    }

    pub fn from_integers(&self, a: i64, b: i64) -> QuadElement {
        self.element(Rational::from_integer(a.into()), Rational::from_integer(b.into()))
    }

    pub fn sqrt_d(&self) -> QuadElement {
        self.element(Rational::zero(), Rational::one())
    }
}

/// An element a + b·√d of ℚ(√d). When b = 0 the element is a rational
/// constant and carries no context.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadElement {
    ctx: Option<QuadContext>,
    a: Rational,
    b: Rational,
}

impl QuadElement {
    fn new(ctx: Option<QuadContext>, a: Rational, b: Rational) -> Self {
        if b.is_zero() {
            QuadElement { ctx: None, a, b }
        } else {
            assert!(ctx.is_some(), "non-rational quadratic element needs a context");
            QuadElement { ctx, a, b }
        }
    }

    /// A rational constant, an element of every ℚ(√d).
    pub fn rational(a: Rational) -> Self {
        QuadElement { ctx: None, a, b: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(Rational::from_integer(n.into()))
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn sqrt_part(&self) -> &Rational {
        &self.b
    }

    pub fn context(&self) -> Option<QuadContext> {
        self.ctx
    }

    /// True if the element is a rational number.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn unified(&self, other: &Self) -> Option<QuadContext> {
        match (self.ctx, other.ctx) {
            (Some(c1), Some(c2)) => {
                assert_eq!(c1, c2, "mixed quadratic contexts");
                Some(c1)
            }
            (Some(c), None) | (None, Some(c)) => Some(c),
            (None, None) => None,
        }
    }

    fn d_rational(&self) -> Rational {
        Rational::from_integer(self.ctx.map(|c| c.d).unwrap_or(0).into())
    }

    /// The Galois conjugate a − b·√d.
    pub fn conjugate(&self) -> Self {
        QuadElement::new(self.ctx, self.a.clone(), -self.b.clone())
    }

    /// The field norm N(a + b√d) = a² − d·b², a rational number.
    pub fn norm(&self) -> Rational {
        self.a.clone() * self.a.clone() - self.d_rational() * self.b.clone() * self.b.clone()
    }
}

impl Add for QuadElement {
    type Output = QuadElement;
    fn add(self, rhs: QuadElement) -> QuadElement {
        let ctx = self.unified(&rhs);
        QuadElement::new(ctx, self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for QuadElement {
    type Output = QuadElement;
    fn sub(self, rhs: QuadElement) -> QuadElement {
        let ctx = self.unified(&rhs);
        QuadElement::new(ctx, self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for QuadElement {
    type Output = QuadElement;
    fn neg(self) -> QuadElement {
        QuadElement::new(self.ctx, -self.a, -self.b)
    }
}

impl Mul for QuadElement {
    type Output = QuadElement;
    fn mul(self, rhs: QuadElement) -> QuadElement {
        let ctx = self.unified(&rhs);
        let d = Rational::from_integer(ctx.map(|c| c.d).unwrap_or(0).into());
        let a = self.a.clone() * rhs.a.clone() + d * self.b.clone() * rhs.b.clone();
        let b = self.a * rhs.b + self.b * rhs.a;
        QuadElement::new(ctx, a, b)
    }
}

impl Div for QuadElement {
    type Output = QuadElement;
    fn div(self, rhs: QuadElement) -> QuadElement {
        assert!(!rhs.is_zero(), "division by zero in ℚ(√d)");
        let n = rhs.norm();
        let conj = rhs.conjugate();
        let prod = self * conj;
        QuadElement::new(prod.ctx, prod.a / n.clone(), prod.b / n)
    }
}

impl Zero for QuadElement {
    fn zero() -> Self {
        QuadElement::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadElement {
    fn one() -> Self {
        QuadElement::rational(Rational::one())
    }
    fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }
}

impl Field for QuadElement {}

impl fmt::Display for QuadElement {
    /// Canonical compact form in the expression grammar:
    /// `1/2+1/2*sqrt(-5)`, `2-sqrt(3)`, `7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let d = self.ctx.expect("irrational element has a context").d;
        let sqrt_term = |f: &mut fmt::Formatter<'_>, mag: &Rational| -> fmt::Result {
            if mag.is_one() {
                write!(f, "sqrt({d})")
            } else {
                write!(f, "{mag}*sqrt({d})")
            }
        };
        if self.a.is_zero() {
            if self.b.is_negative() {
                write!(f, "-")?;
                return sqrt_term(f, &-self.b.clone());
            }
            return sqrt_term(f, &self.b);
        }
        write!(f, "{}", self.a)?;
        if self.b.is_negative() {
            write!(f, "-")?;
            sqrt_term(f, &-self.b.clone())
        } else {
            write!(f, "+")?;
            sqrt_term(f, &self.b)
        }
    }
}
