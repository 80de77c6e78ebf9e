//! The factorization valuation t on ℚ(X) and the paired valuation
//! u = (w, t), whose valuation ring is ℤ[X].

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::function_field::factor::{kronecker_factor, DEFAULT_DEGREE_BOUND};
use crate::function_field::{Polynomial, RationalFunction};
use crate::number_rings::DEFAULT_FACTOR_BOUND;
use crate::valuation_core::DemiValuation;
use crate::value_groups::{ExtendedValue, LabelPoly, PrimeLabel, ValueVector};
use crate::{Int, Rational};

fn poly_exponents(
    p: &Polynomial<Rational>,
    sign: i64,
    degree_bound: usize,
    factor_bound: u64,
    entries: &mut Vec<(PrimeLabel, i64)>,
) -> Result<()> {
    let factored = kronecker_factor(p, degree_bound, factor_bound)?;
    for (poly, e) in factored.factors {
        let label = PrimeLabel::IrreduciblePoly(LabelPoly::new(poly.coeffs().to_vec())?);
        entries.push((label, sign * e as i64));
    }
    Ok(())
}

/// t(f): exponents of the monic irreducible factors of numerator minus
/// denominator. t of a nonzero constant is 0; t(0) = ∞.
pub fn t_value(
    f: &RationalFunction<Rational>,
    degree_bound: usize,
    factor_bound: u64,
) -> Result<ExtendedValue> {
    if f.is_zero() {
        return Ok(ExtendedValue::Infinity);
    }
    let mut entries = Vec::new();
    poly_exponents(f.numerator(), 1, degree_bound, factor_bound, &mut entries)?;
    poly_exponents(f.denominator(), -1, degree_bound, factor_bound, &mut entries)?;
    Ok(ExtendedValue::Finite(ValueVector::from_entries(entries)))
}

/// u(f) = (w(f), t(f)), realized as one vector: rational-prime labels
/// carry the content part, polynomial labels the factorization part.
pub fn u_value(
    f: &RationalFunction<Rational>,
    degree_bound: usize,
    factor_bound: u64,
) -> Result<ExtendedValue> {
    let w = crate::function_field::content::w_value(
        f,
        &crate::number_rings::RationalDivisorValuation { factor_bound },
    )?;
    let t = t_value(f, degree_bound, factor_bound)?;
    match (w, t) {
        (ExtendedValue::Finite(a), ExtendedValue::Finite(b)) => {
            // Disjoint label kinds: the sum is the direct-sum pairing.
            Ok(ExtendedValue::Finite(a.add(&b)))
        }
        _ => Ok(ExtendedValue::Infinity),
    }
}

/// Membership in R(u) = R(w) ∩ R(t) = ℤ[X].
pub fn u_member(
    f: &RationalFunction<Rational>,
    degree_bound: usize,
    factor_bound: u64,
) -> Result<bool> {
    Ok(u_value(f, degree_bound, factor_bound)?.is_nonnegative())
}

/// The direct syntactic test u_member is measured against: the reduced
/// form is a polynomial with integer coefficients.
pub fn is_integer_polynomial(f: &RationalFunction<Rational>) -> bool {
    match f.as_polynomial() {
        Some(p) => p.coeffs().iter().all(|c| c.is_integer()),
        None => false,
    }
}

/// An element whose u-value is the unit vector at the label: the prime
/// itself for p-labels, a primitive integer representative for polynomial
/// labels (whose content is then 0).
pub fn basis_witness(label: &PrimeLabel) -> Result<RationalFunction<Rational>> {
    match label {
        PrimeLabel::RationalPrime(p) => Ok(RationalFunction::constant(
            Rational::from_integer((*p).into()),
        )),
        PrimeLabel::IrreduciblePoly(poly) => {
            use num_integer::Integer as _;
            let mut den = Int::one();
            for c in poly.coeffs() {
                den = den.lcm(c.denom());
            }
            let ints: Vec<Int> = poly
                .coeffs()
                .iter()
                .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
                .collect();
            let mut content = Int::zero();
            for c in &ints {
                content = content.gcd(c);
            }
            if ints.last().is_some_and(|lc| lc.is_negative()) {
                content = -content;
            }
            Ok(RationalFunction::from_poly(Polynomial::from_coeffs(
                ints.into_iter()
                    .map(|c| Rational::from_integer(c / &content))
                    .collect(),
            )))
        }
        PrimeLabel::QuadPrime { .. } => Err(Error::InvalidLabel(format!(
            "{label} is not in the label universe of u"
        ))),
    }
}

/// The ℤ-divisor valuation t on ℚ(X).
#[derive(Debug, Clone)]
pub struct TValuation {
    pub degree_bound: usize,
    pub factor_bound: u64,
}

impl Default for TValuation {
    fn default() -> Self {
        TValuation { degree_bound: DEFAULT_DEGREE_BOUND, factor_bound: DEFAULT_FACTOR_BOUND }
    }
}

impl DemiValuation for TValuation {
    type Elem = RationalFunction<Rational>;

    fn name(&self) -> &str {
        "t"
    }

    fn evaluate(&self, x: &Self::Elem) -> Result<ExtendedValue> {
        t_value(x, self.degree_bound, self.factor_bound)
    }

    fn label_universe(&self) -> &str {
        "monic irreducible polynomials f:*"
    }

    fn representative(&self, label: &PrimeLabel) -> Option<Self::Elem> {
        match label {
            PrimeLabel::IrreduciblePoly(poly) => Some(RationalFunction::from_poly(
                Polynomial::from_coeffs(poly.coeffs().to_vec()),
            )),
            _ => None,
        }
    }
}

/// The surjective ℤ-divisor valuation u on ℚ(X) with R(u) = ℤ[X].
#[derive(Debug, Clone)]
pub struct UValuation {
    pub degree_bound: usize,
    pub factor_bound: u64,
}

impl Default for UValuation {
    fn default() -> Self {
        UValuation { degree_bound: DEFAULT_DEGREE_BOUND, factor_bound: DEFAULT_FACTOR_BOUND }
    }
}

impl DemiValuation for UValuation {
    type Elem = RationalFunction<Rational>;

    fn name(&self) -> &str {
        "u"
    }

    fn evaluate(&self, x: &Self::Elem) -> Result<ExtendedValue> {
        u_value(x, self.degree_bound, self.factor_bound)
    }

    fn label_universe(&self) -> &str {
        "rational primes p:* and monic irreducible polynomials f:*"
    }

    fn representative(&self, label: &PrimeLabel) -> Option<Self::Elem> {
        basis_witness(label).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valuation_core::reconstruct_unit;

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction<Rational> {
        RationalFunction::new(Polynomial::from_i64(n), Polynomial::from_i64(d)).unwrap()
    }

    fn vv(pairs: &[(&str, i64)]) -> ExtendedValue {
        ExtendedValue::Finite(ValueVector::from_entries(
            pairs.iter().map(|&(l, e)| (PrimeLabel::parse(l).unwrap(), e)),
        ))
    }

    #[test]
    fn t_examples() {
        let t = TValuation::default();
        // Nonzero constants have t = 0.
        assert_eq!(t.evaluate(&rf(&[5], &[1])).unwrap(), ExtendedValue::zero());
        // (X²−1)/(X+1)² = (X−1)/(X+1) has t = {X−1: 1, X+1: −1}.
        let f = rf(&[-1, 0, 1], &[1, 2, 1]);
        assert_eq!(
            t.evaluate(&f).unwrap(),
            vv(&[("f:X-1", 1), ("f:X+1", -1)])
        );
        assert_eq!(
            t.evaluate(&RationalFunction::zero()).unwrap(),
            ExtendedValue::Infinity
        );
    }

    #[test]
    fn u_examples() {
        let u = UValuation::default();
        // 3X+1 = 3·(X+1/3): w = {} (content meet of {3:1} and {}) and
        // t = {X+1/3: 1}.
        let f = rf(&[1, 3], &[1]);
        assert_eq!(u.evaluate(&f).unwrap(), vv(&[("f:X+1/3", 1)]));
        assert!(u_member(&f, 6, 1_000_000).unwrap());

        // X/2 has w = {2:-1}: not in ℤ[X].
        let g = rf(&[0, 1], &[2]);
        assert_eq!(u.evaluate(&g).unwrap(), vv(&[("p:2", -1), ("f:X", 1)]));
        assert!(!u_member(&g, 6, 1_000_000).unwrap());

        // 1/X has t = {X:-1}: not in ℤ[X].
        let h = rf(&[1], &[0, 1]);
        assert!(!u_member(&h, 6, 1_000_000).unwrap());
    }

    #[test]
    fn u_membership_matches_the_syntactic_test() {
        let cases = [
            (rf(&[1, 3], &[1]), true),
            (rf(&[0, 1], &[2]), false),
            (rf(&[1], &[0, 1]), false),
            (rf(&[-7, 0, 2], &[1]), true),
            (rf(&[2, 2], &[2]), true),  // reduces to X+1
            (rf(&[1, 2], &[2]), false), // reduces to X+1/2
            (RationalFunction::zero(), true),
        ];
        for (f, expected) in cases {
            assert_eq!(is_integer_polynomial(&f), expected, "syntactic on {f}");
            assert_eq!(u_member(&f, 6, 1_000_000).unwrap(), expected, "u on {f}");
        }
    }

    #[test]
    fn basis_witnesses_are_unit_vectors() {
        let u = UValuation::default();
        let five = PrimeLabel::rational_prime(5).unwrap();
        let w = basis_witness(&five).unwrap();
        assert_eq!(
            u.evaluate(&w).unwrap(),
            ExtendedValue::Finite(ValueVector::unit(five))
        );

        for text in ["f:X^2+1", "f:X+1/3", "f:X-1"] {
            let label = PrimeLabel::parse(text).unwrap();
            let w = basis_witness(&label).unwrap();
            assert_eq!(
                u.evaluate(&w).unwrap(),
                ExtendedValue::Finite(ValueVector::unit(label)),
                "witness for {text}"
            );
        }
        // 3X+1 is the primitive representative of X+1/3.
        let w = basis_witness(&PrimeLabel::parse("f:X+1/3").unwrap()).unwrap();
        assert_eq!(w.to_string(), "3*X+1");

        assert!(basis_witness(&PrimeLabel::parse("q:2:ram").unwrap()).is_err());
    }

    #[test]
    fn unit_reconstruction_under_u() {
        let u = UValuation::default();
        for f in [
            rf(&[6, 4], &[3]),
            rf(&[-1, 0, 1], &[1, 2, 1]),
            rf(&[2], &[5]),
            rf(&[0, 0, 9], &[4, 2]),
        ] {
            let unit = reconstruct_unit(&u, &f).unwrap();
            assert_eq!(
                u.evaluate(&unit).unwrap(),
                ExtendedValue::zero(),
                "reconstructed unit of {f} is a unit"
            );
        }
    }
}
