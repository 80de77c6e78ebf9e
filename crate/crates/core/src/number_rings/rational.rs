//! ℚ with its prime-factorization divisor valuation, and the integer
//! extended-gcd Bézout combiner.

use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::number_rings::factor::{factor_integer, DEFAULT_FACTOR_BOUND};
use crate::valuation_core::{BezoutCertificate, DemiValuation};
use crate::value_groups::{ExtendedValue, PrimeLabel, ValueVector};
use crate::Rational;

/// ν(q) with entries (p, νₚ(numerator) − νₚ(denominator)); ν(0) = ∞.
pub fn rational_valuation(q: &Rational, factor_bound: u64) -> Result<ExtendedValue> {
    if q.is_zero() {
        return Ok(ExtendedValue::Infinity);
    }
    let mut entries = Vec::new();
    for (p, e) in factor_integer(q.numer(), factor_bound)? {
        entries.push((PrimeLabel::RationalPrime(p), e as i64));
    }
    for (p, e) in factor_integer(q.denom(), factor_bound)? {
        entries.push((PrimeLabel::RationalPrime(p), -(e as i64)));
    }
    Ok(ExtendedValue::Finite(ValueVector::from_entries(entries)))
}

/// The divisor valuation of the unique factorization domain ℤ ⊂ ℚ, with
/// the primes themselves as irreducible representatives.
#[derive(Debug, Clone)]
pub struct RationalDivisorValuation {
    pub factor_bound: u64,
}

impl Default for RationalDivisorValuation {
    fn default() -> Self {
        RationalDivisorValuation { factor_bound: DEFAULT_FACTOR_BOUND }
    }
}

impl DemiValuation for RationalDivisorValuation {
    type Elem = Rational;

    fn name(&self) -> &str {
        "rational-divisor"
    }

    fn evaluate(&self, x: &Rational) -> Result<ExtendedValue> {
        rational_valuation(x, self.factor_bound)
    }

    fn label_universe(&self) -> &str {
        "rational primes p:*"
    }

    fn representative(&self, label: &PrimeLabel) -> Option<Rational> {
        match label {
            PrimeLabel::RationalPrime(p) => Some(Rational::from_integer((*p).into())),
            _ => None,
        }
    }
}

/// Bézout combiner for R(ν) = ℤ: integer extended gcd, so that
/// m = gcd(x, y) = c·x + d·y with ν(m) = inf(ν(x), ν(y)).
pub fn rational_gcd_combiner(
    x: &Rational,
    y: &Rational,
) -> Result<BezoutCertificate<Rational>> {
    if !x.is_integer() || !y.is_integer() {
        return Err(Error::InvalidArgument(format!(
            "gcd combiner needs integers, got ({x}, {y})"
        )));
    }
    let gcd = x.numer().extended_gcd(y.numer());
    debug_assert!(!gcd.gcd.is_negative());
    Ok(BezoutCertificate {
        x: x.clone(),
        y: y.clone(),
        c: Rational::from_integer(gcd.x),
        d: Rational::from_integer(gcd.y),
        m: Rational::from_integer(gcd.gcd),
    })
}
