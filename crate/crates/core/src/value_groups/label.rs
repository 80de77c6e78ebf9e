//! Canonical names for the index set of the value group.
//!
//! A label identifies one ℤ component: a rational prime, a prime ideal of
//! a quadratic ring of integers, or a monic irreducible polynomial over ℚ.
//! Labels carry a strict total order (rational primes first, then
//! quadratic primes, then polynomials) so every vector has exactly one
//! serialized form.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::expr;
use crate::Rational;

/// Primality by trial division. Exact for all `u64` inputs at desk scale.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut p = 3u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            return false;
        }
        p += 2;
    }
    true
}

/// How a rational prime sits in a quadratic ring of integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QuadPrimeKind {
    Inert,
    Ramified,
    SplitPlus,
    SplitMinus,
}

impl QuadPrimeKind {
    fn as_str(self) -> &'static str {
        match self {
            QuadPrimeKind::Inert => "inert",
            QuadPrimeKind::Ramified => "ram",
            QuadPrimeKind::SplitPlus => "split+",
            QuadPrimeKind::SplitMinus => "split-",
        }
    }
}

/// A monic polynomial over ℚ of degree ≥ 1, used as an irreducible-factor
/// label. Coefficients ascend by degree; the leading coefficient is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabelPoly {
    coeffs: Vec<Rational>,
}

impl LabelPoly {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::InvalidLabel(
                "polynomial label must have degree at least 1".into(),
            ));
        }
        if !coeffs.last().unwrap().is_one() {
            return Err(Error::InvalidLabel("polynomial label must be monic".into()));
        }
        Ok(LabelPoly { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients, ascending by degree.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn parse(text: &str) -> Result<Self> {
        let ast = expr::parse(text)
            .map_err(|e| Error::InvalidLabel(format!("bad polynomial `{text}`: {e}")))?;
        let coeffs = expr::eval_rational_poly(&ast)
            .map_err(|e| Error::InvalidLabel(format!("bad polynomial `{text}`: {e}")))?;
        Self::new(coeffs)
    }
}

impl PartialOrd for LabelPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LabelPoly {
    // Degree first, then coefficients ascending by degree.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl fmt::Display for LabelPoly {
    /// Canonical compact form in the expression grammar, highest degree
    /// first: `X^2+1`, `X+1/3`, `X^3-2*X+5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = if negative { -c.clone() } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let coeff_is_one = mag.is_one();
            match deg {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !coeff_is_one {
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
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Index of one ℤ component of the value group.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PrimeLabel {
    /// A rational prime p (example: the 2-adic component of ℚ*).
    RationalPrime(u64),
    /// A prime ideal of a quadratic ring of integers, named by the rational
    /// prime below it, its splitting kind, and (for split primes) the
    /// square root of d it selects mod p.
    QuadPrime {
        p: u64,
        kind: QuadPrimeKind,
        root: Option<u64>,
    },
    /// A monic irreducible polynomial over ℚ.
    IrreduciblePoly(LabelPoly),
}

impl PrimeLabel {
    pub fn rational_prime(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::InvalidLabel(format!("{p} is not prime")));
        }
        Ok(PrimeLabel::RationalPrime(p))
    }

    /// Build a quadratic prime label. The root must be present exactly for
    /// split kinds and lie in [0, p). Consistency with a particular d is
    /// the constructing ring's responsibility.
    pub fn quad_prime(p: u64, kind: QuadPrimeKind, root: Option<u64>) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::InvalidLabel(format!("{p} is not prime")));
        }
        let split = matches!(kind, QuadPrimeKind::SplitPlus | QuadPrimeKind::SplitMinus);
        match (split, root) {
            (true, Some(r)) if r < p => {}
            (false, None) => {}
            (true, Some(r)) => {
                return Err(Error::InvalidLabel(format!("root {r} not in [0, {p})")))
            }
            (true, None) => {
                return Err(Error::InvalidLabel("split label requires a root".into()))
            }
            (false, Some(_)) => {
                return Err(Error::InvalidLabel(
                    "only split labels carry a root".into(),
                ))
            }
        }
        Ok(PrimeLabel::QuadPrime { p, kind, root })
    }

    pub fn irreducible_poly(poly: LabelPoly) -> Self {
        PrimeLabel::IrreduciblePoly(poly)
    }

    /// Parse a canonical label string: `p:2`, `q:2:ram`, `q:3:split+:1`,
    /// `f:X^2+1`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::InvalidLabel(format!("malformed label `{text}`"));
        let (tag, rest) = text.split_once(':').ok_or_else(bad)?;
        match tag {
            "p" => {
                let p: u64 = rest.parse().map_err(|_| bad())?;
                Self::rational_prime(p)
            }
            "q" => {
                let (p_str, kind_rest) = rest.split_once(':').ok_or_else(bad)?;
                let p: u64 = p_str.parse().map_err(|_| bad())?;
                let (kind, root) = match kind_rest {
                    "inert" => (QuadPrimeKind::Inert, None),
                    "ram" => (QuadPrimeKind::Ramified, None),
                    other => {
                        let (k, r) = other.split_once(':').ok_or_else(bad)?;
                        let kind = match k {
                            "split+" => QuadPrimeKind::SplitPlus,
                            "split-" => QuadPrimeKind::SplitMinus,
                            _ => return Err(bad()),
                        };
                        let root: u64 = r.parse().map_err(|_| bad())?;
                        (kind, Some(root))
                    }
                };
                Self::quad_prime(p, kind, root)
            }
            "f" => Ok(PrimeLabel::IrreduciblePoly(LabelPoly::parse(rest)?)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for PrimeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeLabel::RationalPrime(p) => write!(f, "p:{p}"),
            PrimeLabel::QuadPrime { p, kind, root } => {
                write!(f, "q:{p}:{}", kind.as_str())?;
                if let Some(r) = root {
                    write!(f, ":{r}")?;
                }
                Ok(())
            }
            PrimeLabel::IrreduciblePoly(poly) => write!(f, "f:{poly}"),
        }
    }
}

impl serde::Serialize for PrimeLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for PrimeLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        PrimeLabel::parse(&text).map_err(serde::de::Error::custom)
    }
}
