//! Factorization over ℚ[X] by Kronecker's interpolation method.
//!
//! A candidate divisor of degree d is determined by its values at d+1
//! integer points, and at each point the value must divide the value of
//! the input. Enumerating all divisor tuples and interpolating therefore
//! finds every factor of degree ≤ deg/2, and certifies irreducibility by
//! exhaustion when none divides. Exact, self-certifying, and limited to
//! desk-scale degrees by an explicit bound.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::function_field::Polynomial;
use crate::number_rings::{divisors, factor_integer};
use crate::{Int, Rational};

/// Default cap on the degree accepted by the factorizer.
pub const DEFAULT_DEGREE_BOUND: usize = 6;

/// unit · ∏ factorᵉ = input exactly; factors are monic and certified
/// irreducible by exhaustion of Kronecker candidate divisors.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorizationResult {
    pub unit: Rational,
    pub factors: Vec<(Polynomial<Rational>, u32)>,
}

impl FactorizationResult {
    /// Multiply the factorization back out.
    pub fn expand(&self) -> Polynomial<Rational> {
        let mut acc = Polynomial::constant(self.unit.clone());
        for (p, e) in &self.factors {
            acc = &acc * &p.pow(*e);
        }
        acc
    }

    /// True iff the input was a single irreducible (times a unit).
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

impl Serialize for FactorizationResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct FactorJson {
            poly: String,
            exp: u32,
        }
        #[derive(Serialize)]
        struct ResultJson {
            unit: String,
            factors: FactorsJson,
        }
        struct FactorsJson(Vec<FactorJson>);
        impl Serialize for FactorsJson {
            fn serialize<S: serde::Serializer>(
                &self,
                s: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for f in &self.0 {
                    seq.serialize_element(f)?;
                }
                seq.end()
            }
        }
        ResultJson {
            unit: self.unit.to_string(),
            factors: FactorsJson(
                self.factors
                    .iter()
                    .map(|(p, e)| FactorJson { poly: p.to_string(), exp: *e })
                    .collect(),
            ),
        }
        .serialize(s)
    }
}

impl fmt::Display for FactorizationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.unit)?;
        for (p, e) in &self.factors {
            write!(f, " * ({p})")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// The primitive integer polynomial associate (positive leading
/// coefficient, coprime integer coefficients). Input must be nonzero.
fn primitive_integer(p: &Polynomial<Rational>) -> Polynomial<Rational> {
    use num_integer::Integer as _;
    debug_assert!(!p.is_zero());
    let mut den = Int::one();
    for c in p.coeffs() {
        den = den.lcm(c.denom());
    }
    let ints: Vec<Int> = p
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
    Polynomial::from_coeffs(
        ints.into_iter()
            .map(|c| Rational::from_integer(c / &content))
            .collect(),
    )
}

/// Yun's squarefree decomposition of a nonconstant polynomial: monic
/// squarefree parts aᵢ with ∏ aᵢ^i = monic(input).
fn squarefree_decomposition(f: &Polynomial<Rational>) -> Vec<(Polynomial<Rational>, u32)> {
    let f = f.monic();
    let df = f.derivative();
    let g = f.gcd(&df);
    if g.is_constant() {
        return vec![(f, 1)];
    }
    let exact = |a: &Polynomial<Rational>, b: &Polynomial<Rational>| {
        let (q, r) = a.div_rem(b).expect("divisor is nonzero");
        debug_assert!(r.is_zero());
        q
    };
    let mut out = Vec::new();
    let mut b = exact(&f, &g);
    let mut d = &exact(&df, &g) - &b.derivative();
    let mut i = 1u32;
    while !b.is_constant() {
        let a = b.gcd(&d);
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        b = exact(&b, &a);
        d = &exact(&d, &a) - &b.derivative();
        i += 1;
    }
    out
}

/// Lagrange interpolation through integer points; `None` when some
/// coefficient is not an integer (no integer factor takes those values).
fn interpolate_integer(points: &[i64], values: &[&Int]) -> Option<Polynomial<Rational>> {
    let mut acc = Polynomial::<Rational>::zero();
    for (i, (&xi, &vi)) in points.iter().zip(values).enumerate() {
        let mut basis = Polynomial::constant(Rational::from_integer(vi.clone()));
        for (j, &xj) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let scale = Rational::new(Int::one(), Int::from(xi - xj));
            let linear = Polynomial::from_coeffs(vec![
                Rational::from_integer(Int::from(-xj)),
                Rational::one(),
            ]);
            basis = (&basis * &linear).scale(&scale);
        }
        acc = &acc + &basis;
    }
    if acc.coeffs().iter().all(|c| c.is_integer()) {
        Some(acc)
    } else {
        None
    }
}

/// Factor a primitive squarefree integer polynomial into primitive
/// irreducible integer factors. Irreducibility is certified: every
/// candidate divisor of every degree up to deg/2 has been tried.
fn kronecker_search(
    g: &Polynomial<Rational>,
    factor_bound: u64,
) -> Result<Vec<Polynomial<Rational>>> {
    let deg = g.degree().expect("nonzero input");
    if deg <= 1 {
        return Ok(vec![g.clone()]);
    }
    let max_d = deg / 2;

    // Evaluation points 0, 1, −1, 2, −2, … where g does not vanish; a
    // vanishing point hands us a linear factor immediately.
    let mut points: Vec<i64> = Vec::with_capacity(max_d + 1);
    let mut values: Vec<Int> = Vec::with_capacity(max_d + 1);
    let mut k: i64 = 0;
    let mut candidates = std::iter::from_fn(move || {
        let next = if k <= 0 { -k + 1 } else { -k };
        let current = k;
        k = next;
        Some(current)
    });
    while points.len() < max_d + 1 {
        let x = candidates.next().expect("infinite iterator");
        let val = g.eval(&Rational::from_integer(x.into()));
        if val.is_zero() {
            let linear = Polynomial::from_coeffs(vec![
                Rational::from_integer(Int::from(-x)),
                Rational::one(),
            ]);
            let (quot, _) = g.div_rem(&linear)?;
            let mut out = vec![linear];
            out.extend(kronecker_search(&primitive_integer(&quot), factor_bound)?);
            return Ok(out);
        }
        points.push(x);
        values.push(val.to_integer());
    }

    for d in 1..=max_d {
        let n_pts = d + 1;
        let mut sets: Vec<Vec<Int>> = Vec::with_capacity(n_pts);
        for (i, value) in values.iter().take(n_pts).enumerate() {
            let divs = divisors(&factor_integer(value, factor_bound)?);
            if i == 0 {
                // Fixing the first value positive halves the search: a
                // factor and its negation divide together.
                sets.push(divs);
            } else {
                let mut signed = Vec::with_capacity(divs.len() * 2);
                for d in divs {
                    signed.push(d.clone());
                    signed.push(-d);
                }
                sets.push(signed);
            }
        }

        let mut idx = vec![0usize; n_pts];
        'tuples: loop {
            let tuple: Vec<&Int> = idx.iter().zip(&sets).map(|(&i, s)| &s[i]).collect();
            if let Some(cand) = interpolate_integer(&points[..n_pts], &tuple) {
                if cand.degree() == Some(d) && g.divisible_by(&cand) {
                    let (quot, _) = g.div_rem(&cand)?;
                    let mut out = kronecker_search(&primitive_integer(&cand), factor_bound)?;
                    out.extend(kronecker_search(&primitive_integer(&quot), factor_bound)?);
                    return Ok(out);
                }
            }
            let mut pos = 0;
            loop {
                idx[pos] += 1;
                if idx[pos] < sets[pos].len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
                if pos == n_pts {
                    break 'tuples;
                }
            }
        }
    }
    Ok(vec![g.clone()])
}

/// Factor a nonzero polynomial over ℚ into a unit and monic irreducible
/// factors with exponents.
pub fn kronecker_factor(
    f: &Polynomial<Rational>,
    degree_bound: usize,
    factor_bound: u64,
) -> Result<FactorizationResult> {
    let Some(deg) = f.degree() else {
        return Err(Error::InvalidArgument("cannot factor the zero polynomial".into()));
    };
    if deg > degree_bound {
        return Err(Error::DegreeBoundExceeded { degree: deg, bound: degree_bound });
    }
    if deg == 0 {
        return Ok(FactorizationResult { unit: f.coeff(0), factors: Vec::new() });
    }

    let primitive = primitive_integer(f);
    let mut factors: Vec<(Polynomial<Rational>, u32)> = Vec::new();
    for (part, mult) in squarefree_decomposition(&primitive) {
        for irr in kronecker_search(&primitive_integer(&part), factor_bound)? {
            let monic = irr.monic();
            match factors.iter_mut().find(|(p, _)| *p == monic) {
                Some((_, e)) => *e += mult,
                None => factors.push((monic, mult)),
            }
        }
    }
    factors.sort_by(|(p, _), (q, _)| {
        p.degree()
            .cmp(&q.degree())
            .then_with(|| p.coeffs().cmp(q.coeffs()))
    });

    let unit = f.leading().expect("nonzero").clone();
    let result = FactorizationResult { unit, factors };
    if result.expand() != *f {
        return Err(Error::InvalidArgument(
            "internal: factorization does not re-expand to the input".into(),
        ));
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> Polynomial<Rational> {
        Polynomial::from_i64(coeffs)
    }

    fn factor(coeffs: &[i64]) -> FactorizationResult {
        kronecker_factor(&poly(coeffs), DEFAULT_DEGREE_BOUND, 1_000_000).unwrap()
    }

    #[test]
    fn splits_a_difference_of_squares() {
        let r = factor(&[-1, 0, 1]);
        assert_eq!(r.unit, Rational::one());
        assert_eq!(r.factors, vec![(poly(&[-1, 1]), 1), (poly(&[1, 1]), 1)]);
    }

    #[test]
    fn certifies_irreducibility() {
        let r = factor(&[1, 0, 1]);
        assert!(r.is_irreducible());
        assert_eq!(r.factors, vec![(poly(&[1, 0, 1]), 1)]);
        // Degree 4 with no roots and no quadratic factors over ℚ.
        let r = factor(&[2, 0, 0, 0, 1]);
        assert!(r.is_irreducible(), "X^4+2 is irreducible by Eisenstein");
        // X^4 + 4 = (X^2-2X+2)(X^2+2X+2) despite having no rational roots.
        let r = factor(&[4, 0, 0, 0, 1]);
        assert!(!r.is_irreducible());
        assert_eq!(
            r.factors,
            vec![(poly(&[2, -2, 1]), 1), (poly(&[2, 2, 1]), 1)]
        );
    }

    #[test]
    fn units_are_pulled_out() {
        let r = factor(&[-6, 0, 6]);
        assert_eq!(r.unit, Rational::from_integer(6.into()));
        assert_eq!(r.factors, vec![(poly(&[-1, 1]), 1), (poly(&[1, 1]), 1)]);
        assert_eq!(r.expand(), poly(&[-6, 0, 6]));
    }

    #[test]
    fn multiplicities_via_squarefree_decomposition() {
        // (X+1)²(X+2)
        let f = &(&poly(&[1, 1]) * &poly(&[1, 1])) * &poly(&[2, 1]);
        let r = kronecker_factor(&f, DEFAULT_DEGREE_BOUND, 1_000_000).unwrap();
        assert_eq!(r.factors, vec![(poly(&[1, 1]), 2), (poly(&[2, 1]), 1)]);
        assert_eq!(r.expand(), f);
    }

    #[test]
    fn rational_coefficients_fold_into_the_unit() {
        // 3X+1 = 3·(X + 1/3)
        let r = factor(&[1, 3]);
        assert_eq!(r.unit, Rational::from_integer(3.into()));
        assert_eq!(r.factors.len(), 1);
        assert_eq!(r.factors[0].0.to_string(), "X+1/3");
        assert_eq!(r.expand(), poly(&[1, 3]));
    }

    #[test]
    fn degree_bound_is_enforced() {
        let mut coeffs = vec![0i64; 8];
        coeffs[7] = 1;
        coeffs[0] = 1;
        let err = kronecker_factor(&poly(&coeffs), 6, 1_000_000).unwrap_err();
        assert!(matches!(err, Error::DegreeBoundExceeded { degree: 7, bound: 6 }));
        assert!(kronecker_factor(&Polynomial::zero(), 6, 1_000_000).is_err());
    }

    #[test]
    fn constants_are_units() {
        let r = factor(&[5]);
        assert_eq!(r.unit, Rational::from_integer(5.into()));
        assert!(r.factors.is_empty());
    }

    #[test]
    fn json_schema() {
        let r = factor(&[-6, 0, 6]);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"unit":"6","factors":[{"poly":"X-1","exp":1},{"poly":"X+1","exp":1}]}"#
        );
    }

    /// Independent reducibility oracle for degree ≤ 3: a primitive integer
    /// polynomial of degree 2 or 3 is reducible over ℚ iff it has a
    /// primitive integer linear factor aX+b with a | leading and
    /// b | constant coefficient.
    pub(crate) fn linear_divisor_oracle(f: &Polynomial<Rational>) -> bool {
        let deg = f.degree().unwrap();
        assert!((2..=3).contains(&deg));
        let prim = primitive_integer(f);
        let lc = prim.leading().unwrap().to_integer();
        let c0 = prim.coeff(0).to_integer();
        let a_max: i64 = num_traits::ToPrimitive::to_i64(&lc.abs()).unwrap();
        let b_max: i64 = num_traits::ToPrimitive::to_i64(&c0.abs()).unwrap().max(1);
        for a in 1..=a_max {
            if !(&lc % a).is_zero() {
                continue;
            }
            for b in -b_max..=b_max {
                if !c0.is_zero() && (b == 0 || !(&c0 % b).is_zero()) {
                    continue;
                }
                let cand = poly(&[b, a]);
                if prim.divisible_by(&cand) {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn verdicts_match_the_linear_divisor_oracle_on_a_sample() {
        for coeffs in [
            [1i64, 1, 1, 1],
            [2, -3, 0, 1],
            [-4, 0, 3, 2],
            [1, 2, 3, 4],
            [0, 1, 0, 1],
            [3, 0, -2, 0],
        ] {
            let f = poly(&coeffs);
            if f.degree().is_none_or(|d| d < 2) {
                continue;
            }
            let r = kronecker_factor(&f, DEFAULT_DEGREE_BOUND, 1_000_000).unwrap();
            assert_eq!(
                r.is_irreducible(),
                !linear_divisor_oracle(&f),
                "verdict mismatch on {f}"
            );
        }
    }
}
