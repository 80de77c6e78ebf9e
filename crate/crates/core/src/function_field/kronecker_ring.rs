//! The Kronecker function ring R(w) as a Bézout/principal ideal domain:
//! principal generators by X^h-folding, coefficient cofactors, and the
//! contraction/extension correspondence with ideals of the base ring.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::function_field::content::{content_value, kronecker_ring_member, w_value};
use crate::function_field::{Polynomial, RationalFunction};
use crate::number_rings::{QuadContext, QuadIdeal};
use crate::valuation_core::DemiValuation;
use crate::value_groups::ExtendedValue;
use crate::Rational;

/// A finitely generated ideal of R(w), represented by its generators.
/// Every generator must pass membership.
#[derive(Debug, Clone)]
pub struct KroneckerRingIdeal<K> {
    gens: Vec<RationalFunction<K>>,
}

impl<K: Field> KroneckerRingIdeal<K> {
    pub fn new<V>(v: &V, gens: Vec<RationalFunction<K>>) -> Result<Self>
    where
        V: DemiValuation<Elem = K>,
    {
        for g in &gens {
            if !kronecker_ring_member(g, v)? {
                return Err(Error::InvalidArgument(format!(
                    "generator {g} is not in R(w)"
                )));
            }
        }
        Ok(KroneckerRingIdeal { gens })
    }

    pub fn generators(&self) -> &[RationalFunction<K>] {
        &self.gens
    }
}

/// One fold step of the principal-generator construction.
#[derive(Debug, Clone, PartialEq)]
pub struct FoldStep {
    /// The exponent h in the combining monomial X^h.
    pub h: usize,
    /// Whether the accumulator played the role of p in X^h·p + q.
    pub p_from_accumulator: bool,
}

/// A principal generator for a finitely generated ideal of R(w), with the
/// evidence: w(m) equals the meet of the generator values, every gᵢ/m is
/// in R(w), and m = Σ cᵢ·gᵢ with each cᵢ (a monomial, 1, or 0) in R(w).
#[derive(Debug, Clone)]
pub struct RwPrincipalGenerator<K> {
    pub generator: RationalFunction<K>,
    pub value: ExtendedValue,
    pub cofactors: Vec<RationalFunction<K>>,
    /// Combination coefficients, aligned with the input generators.
    pub combination: Vec<RationalFunction<K>>,
    pub steps: Vec<FoldStep>,
}

/// Fold the Bézout construction over the generators: at each step write
/// the accumulator and the next generator over the common denominator
/// (the product of denominators), let p be the side with the numerator of
/// larger degree (ties favor the accumulator), and combine into
/// (X^{deg q + 1}·p + q)/r. Zero generators are dropped; the all-zero
/// ideal yields m = 0.
pub fn rw_principal_generator<V>(
    v: &V,
    ideal: &KroneckerRingIdeal<V::Elem>,
) -> Result<RwPrincipalGenerator<V::Elem>>
where
    V: DemiValuation,
{
    let gens = ideal.generators();
    let live: Vec<usize> = (0..gens.len()).filter(|&i| !gens[i].is_zero()).collect();
    let Some((&first, rest)) = live.split_first() else {
        return Ok(RwPrincipalGenerator {
            generator: RationalFunction::zero(),
            value: ExtendedValue::Infinity,
            cofactors: vec![RationalFunction::zero(); gens.len()],
            combination: vec![RationalFunction::zero(); gens.len()],
            steps: Vec::new(),
        });
    };

    let mut acc = gens[first].clone();
    let mut combination = vec![RationalFunction::zero(); gens.len()];
    combination[first] = RationalFunction::one();
    let mut steps = Vec::new();

    for &j in rest {
        let g = &gens[j];
        // Numerator degrees over the common denominator den(acc)·den(g).
        let acc_deg = acc.numerator().degree().expect("accumulator is nonzero")
            + g.denominator().degree().expect("denominator is nonzero");
        let gen_deg = g.numerator().degree().expect("generator is nonzero")
            + acc.denominator().degree().expect("denominator is nonzero");
        let p_from_accumulator = acc_deg >= gen_deg;
        let h = if p_from_accumulator { gen_deg } else { acc_deg } + 1;
        let xh = RationalFunction::from_poly(Polynomial::monomial(V::Elem::one(), h));

        if p_from_accumulator {
            acc = xh.clone() * acc + g.clone();
            for c in combination.iter_mut() {
                *c = xh.clone() * c.clone();
            }
            combination[j] = RationalFunction::one();
        } else {
            acc = xh.clone() * g.clone() + acc;
            combination[j] = xh;
        }
        steps.push(FoldStep { h, p_from_accumulator });
    }

    // The generator's value must be the meet of the generator values.
    let mut meet = ExtendedValue::Infinity;
    for g in gens {
        meet = meet.meet(&w_value(g, v)?);
    }
    let value = w_value(&acc, v)?;
    if value != meet {
        return Err(Error::InvalidArgument(format!(
            "internal: generator value {value} differs from the meet {meet}"
        )));
    }

    // Cofactors gᵢ/m all lie in R(w); the combination re-evaluates to m.
    let mut cofactors = Vec::with_capacity(gens.len());
    for g in gens {
        let q = g.clone() / acc.clone();
        if !kronecker_ring_member(&q, v)? {
            return Err(Error::InvalidArgument(format!(
                "internal: cofactor {q} left R(w)"
            )));
        }
        cofactors.push(q);
    }
    let mut recombined = RationalFunction::zero();
    for (c, g) in combination.iter().zip(gens) {
        recombined = recombined + c.clone() * g.clone();
    }
    if recombined != acc {
        return Err(Error::InvalidArgument(
            "internal: certificate chain does not re-evaluate to the generator".into(),
        ));
    }

    Ok(RwPrincipalGenerator { generator: acc, value, cofactors, combination, steps })
}

/// The coefficients of p, each divided by p: by the definition of content
/// as a meet, every aᵢ/p lies in R(w), so the coefficients of any member
/// of an ideal belong to the ideal.
pub fn coefficient_cofactors<V>(
    p: &Polynomial<V::Elem>,
    v: &V,
) -> Result<Vec<RationalFunction<V::Elem>>>
where
    V: DemiValuation,
{
    if p.is_zero() {
        return Err(Error::InvalidArgument(
            "the zero polynomial has no coefficient cofactors".into(),
        ));
    }
    let mut out = Vec::new();
    for a in p.coeffs() {
        if a.is_zero() {
            continue;
        }
        let cof = RationalFunction::new(Polynomial::constant(a.clone()), p.clone())?;
        if !kronecker_ring_member(&cof, v)? {
            return Err(Error::InvalidArgument(format!(
                "internal: coefficient cofactor {cof} left R(w)"
            )));
        }
        out.push(cof);
    }
    Ok(out)
}

/// Fractional-ideal arithmetic of the base ring, as needed by the ideal
/// correspondence: inverses of content ideals and a membership oracle.
pub trait IdealToolkit {
    type Elem: Field;

    /// Generators of the inverse of the fractional ideal generated by the
    /// given elements (not all zero).
    fn inverse_ideal_generators(&self, gens: &[Self::Elem]) -> Result<Vec<Self::Elem>>;

    /// Exact membership of x in the fractional ideal generated by `gens`.
    fn ideal_contains(&self, gens: &[Self::Elem], x: &Self::Elem) -> Result<bool>;
}

/// ℚ as the fraction field of the PID ℤ: every fractional ideal is
/// principal, generated by the rational gcd of its generators.
#[derive(Debug, Clone, Default)]
pub struct RationalIdealToolkit;

fn rational_content(gens: &[Rational]) -> Result<Rational> {
    use num_integer::Integer as _;
    let nonzero: Vec<&Rational> = gens.iter().filter(|g| !g.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    let mut den = crate::Int::one();
    for g in &nonzero {
        den = den.lcm(g.denom());
    }
    let mut num = crate::Int::zero();
    for g in &nonzero {
        let scaled = (*g * Rational::from_integer(den.clone())).to_integer();
        num = num.gcd(&scaled);
    }
    Ok(Rational::new(num, den))
}

impl IdealToolkit for RationalIdealToolkit {
    type Elem = Rational;

    fn inverse_ideal_generators(&self, gens: &[Rational]) -> Result<Vec<Rational>> {
        Ok(vec![rational_content(gens)?.recip()])
    }

    fn ideal_contains(&self, gens: &[Rational], x: &Rational) -> Result<bool> {
        if x.is_zero() {
            return Ok(true);
        }
        let content = rational_content(gens)?;
        Ok((x / content).is_integer())
    }
}

/// ℚ(√d) with the HNF fractional-ideal arithmetic of ℤ[√d].
#[derive(Debug, Clone)]
pub struct QuadIdealToolkit {
    ctx: QuadContext,
}

impl QuadIdealToolkit {
    pub fn new(ctx: QuadContext) -> Self {
        QuadIdealToolkit { ctx }
    }

    pub fn content_ideal(&self, gens: &[crate::number_rings::QuadElement]) -> Result<QuadIdeal> {
        QuadIdeal::from_generators(self.ctx, gens)
    }
}

impl IdealToolkit for QuadIdealToolkit {
    type Elem = crate::number_rings::QuadElement;

    fn inverse_ideal_generators(&self, gens: &[Self::Elem]) -> Result<Vec<Self::Elem>> {
        let ideal = QuadIdeal::from_generators(self.ctx, gens)?;
        Ok(ideal.inverse().basis_elements().to_vec())
    }

    fn ideal_contains(&self, gens: &[Self::Elem], x: &Self::Elem) -> Result<bool> {
        if x.is_zero() {
            return Ok(true);
        }
        Ok(QuadIdeal::from_generators(self.ctx, gens)?.contains(x))
    }
}

/// A polynomial with the same w-value as the rational function f = r/s:
/// invert the content ideal of s, spread its generators over distinct
/// monomials to get u with w(u) = −w(s), and return r·u.
pub fn polynomial_with_same_value<V, T>(
    f: &RationalFunction<V::Elem>,
    v: &V,
    toolkit: &T,
) -> Result<Polynomial<V::Elem>>
where
    V: DemiValuation,
    T: IdealToolkit<Elem = V::Elem>,
{
    if f.is_zero() {
        return Err(Error::InvalidArgument(
            "the zero function has no content representative".into(),
        ));
    }
    let s = f.denominator();
    // A constant denominator c inverts directly: u = 1/c, so a polynomial
    // input comes back unchanged.
    let u = if s.is_constant() {
        Polynomial::constant(s.coeff(0).inverse().expect("denominator is nonzero"))
    } else {
        let s_coeffs: Vec<V::Elem> =
            s.coeffs().iter().filter(|c| !c.is_zero()).cloned().collect();
        Polynomial::from_coeffs(toolkit.inverse_ideal_generators(&s_coeffs)?)
    };
    let result = f.numerator() * &u;
    // The contract: content(result) = w(f), exactly.
    let got = content_value(&result, v)?;
    let want = w_value(f, v)?;
    if got != want {
        return Err(Error::InvalidArgument(format!(
            "internal: content {got} of the representative differs from w(f) = {want}"
        )));
    }
    Ok(result)
}

/// Extend a base-ring ideal to R(w) by viewing its generators as constants.
pub fn extend_ideal<V>(
    v: &V,
    base_gens: &[V::Elem],
) -> Result<KroneckerRingIdeal<V::Elem>>
where
    V: DemiValuation,
{
    KroneckerRingIdeal::new(
        v,
        base_gens
            .iter()
            .map(|g| RationalFunction::constant(g.clone()))
            .collect(),
    )
}

/// Contract an ideal of R(w) to the base ring: for each generator, take a
/// polynomial with the same value and collect its coefficients. The result
/// generates J ∩ R(ν).
pub fn contract_ideal<V, T>(
    v: &V,
    toolkit: &T,
    ideal: &KroneckerRingIdeal<V::Elem>,
) -> Result<Vec<V::Elem>>
where
    V: DemiValuation,
    T: IdealToolkit<Elem = V::Elem>,
{
    let mut out = Vec::new();
    for g in ideal.generators() {
        if g.is_zero() {
            continue;
        }
        let p = polynomial_with_same_value(g, v, toolkit)?;
        out.extend(p.coeffs().iter().filter(|c| !c.is_zero()).cloned());
    }
    Ok(out)
}

/// Equality of finitely generated R(w)-ideals: in a Bézout domain inside a
/// valuation-like ring, principal ideals coincide iff their generators
/// have equal value.
pub fn rw_ideal_equal<V>(
    v: &V,
    lhs: &KroneckerRingIdeal<V::Elem>,
    rhs: &KroneckerRingIdeal<V::Elem>,
) -> Result<bool>
where
    V: DemiValuation,
{
    let a = rw_principal_generator(v, lhs)?;
    let b = rw_principal_generator(v, rhs)?;
    Ok(a.value == b.value)
}

/// Verify 𝔟 = 𝔟R(w) ∩ R(ν) on samples.
///
/// Convexity: for every probe t, ν(t) ≥ inf ν(gens) must agree exactly
/// with membership of t in the base ideal. Combinations: engineered
/// elements Σ pᵢxᵢ (pᵢ ∈ R(w)) that collapse to constants must land back
/// in the base ideal.
pub fn extend_contract_roundtrip_check<V, T>(
    v: &V,
    toolkit: &T,
    base_gens: &[V::Elem],
    ring_probes: &[V::Elem],
    mixers: &[RationalFunction<V::Elem>],
) -> Result<bool>
where
    V: DemiValuation,
    T: IdealToolkit<Elem = V::Elem>,
{
    if base_gens.iter().all(|g| g.is_zero()) {
        return Err(Error::ZeroIdeal);
    }
    let mut meet = ExtendedValue::Infinity;
    for g in base_gens {
        meet = meet.meet(&v.evaluate(g)?);
    }

    let above_meet = |val: &ExtendedValue| {
        matches!(
            val.compare(&meet),
            crate::value_groups::OrderingResult::Greater
                | crate::value_groups::OrderingResult::Equal
        )
    };

    // Convexity agreement, both directions, on probes and on elements of
    // the ideal itself.
    let mut probes: Vec<V::Elem> = ring_probes.to_vec();
    for g in base_gens {
        probes.push(g.clone());
        for t in ring_probes {
            probes.push(g.clone() * t.clone());
        }
        for h in base_gens {
            probes.push(g.clone() + h.clone());
        }
    }
    for t in &probes {
        let lhs = above_meet(&v.evaluate(t)?);
        let rhs = toolkit.ideal_contains(base_gens, t)?;
        if lhs != rhs {
            return Ok(false);
        }
    }

    // Combinations p·x + q·y with p, q ∈ R(w) that collapse to constants:
    // p = h·y, q = −h·x + c gives p·x + q·y = c·y ∈ 𝔟.
    for x in base_gens {
        for y in base_gens {
            for h in mixers {
                for c in ring_probes.iter().take(3) {
                    if !v.evaluate(c)?.is_nonnegative() {
                        continue;
                    }
                    let p = h.clone() * RationalFunction::constant(y.clone());
                    let q = RationalFunction::constant(c.clone())
                        - h.clone() * RationalFunction::constant(x.clone());
                    if !kronecker_ring_member(&p, v)? || !kronecker_ring_member(&q, v)? {
                        continue;
                    }
                    let combo = p * RationalFunction::constant(x.clone())
                        + q * RationalFunction::constant(y.clone());
                    let Some(constant) = combo.as_constant() else {
                        return Ok(false);
                    };
                    if !toolkit.ideal_contains(base_gens, &constant)? {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number_rings::{
        is_principal_search, QuadDivisorValuation, QuadElement, RationalDivisorValuation,
    };
    use crate::value_groups::{PrimeLabel, ValueVector};

    fn vv(pairs: &[(&str, i64)]) -> ExtendedValue {
        ExtendedValue::Finite(ValueVector::from_entries(
            pairs.iter().map(|&(l, e)| (PrimeLabel::parse(l).unwrap(), e)),
        ))
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction<Rational> {
        RationalFunction::new(Polynomial::from_i64(n), Polynomial::from_i64(d)).unwrap()
    }

    #[test]
    fn principal_generator_of_two_and_x() {
        let v = RationalDivisorValuation::default();
        let ideal =
            KroneckerRingIdeal::new(&v, vec![rf(&[2], &[1]), rf(&[0, 1], &[1])]).unwrap();
        let out = rw_principal_generator(&v, &ideal).unwrap();
        // X has the larger numerator degree, so p = X, q = 2, h = 1:
        // m = X·X + 2.
        assert_eq!(out.generator, rf(&[2, 0, 1], &[1]));
        assert_eq!(out.value, ExtendedValue::zero());
        assert_eq!(out.steps, vec![FoldStep { h: 1, p_from_accumulator: false }]);
    }

    #[test]
    fn single_generator_is_returned_unchanged() {
        let v = RationalDivisorValuation::default();
        let f = rf(&[1, 1], &[2, 1]);
        let ideal = KroneckerRingIdeal::new(&v, vec![f.clone()]).unwrap();
        let out = rw_principal_generator(&v, &ideal).unwrap();
        assert_eq!(out.generator, f);
        assert_eq!(out.cofactors, vec![RationalFunction::one()]);
        assert!(out.steps.is_empty());
    }

    #[test]
    fn bezoutification_of_the_nonprincipal_dedekind_ideal() {
        // ℘₂ = (2, 1+√-5) is not principal in ℤ[√-5], but its extension to
        // R(w) is principal with the explicit generator 2X + (1+√-5).
        let ctx = QuadContext::new(-5).unwrap();
        let v = QuadDivisorValuation::new(ctx);
        let p2 = QuadIdeal::from_generators(
            ctx,
            &[QuadElement::from_int(2), ctx.from_integers(1, 1)],
        )
        .unwrap();
        assert_eq!(is_principal_search(&p2, 100).unwrap(), None);

        let ideal = KroneckerRingIdeal::new(
            &v,
            vec![
                RationalFunction::constant(QuadElement::from_int(2)),
                RationalFunction::constant(ctx.from_integers(1, 1)),
            ],
        )
        .unwrap();
        let out = rw_principal_generator(&v, &ideal).unwrap();
        let expected = RationalFunction::from_poly(Polynomial::from_coeffs(vec![
            ctx.from_integers(1, 1),
            QuadElement::from_int(2),
        ]));
        assert_eq!(out.generator, expected);
        assert_eq!(out.value, vv(&[("q:2:ram", 1)]));
        for c in &out.cofactors {
            assert!(kronecker_ring_member(c, &v).unwrap());
        }
    }

    #[test]
    fn zero_ideal_collapses() {
        let v = RationalDivisorValuation::default();
        let ideal = KroneckerRingIdeal::new(
            &v,
            vec![RationalFunction::zero(), RationalFunction::zero()],
        )
        .unwrap();
        let out = rw_principal_generator(&v, &ideal).unwrap();
        assert!(out.generator.is_zero());
        assert_eq!(out.value, ExtendedValue::Infinity);
    }

    #[test]
    fn coefficient_cofactor_examples() {
        let v = RationalDivisorValuation::default();
        // p = 2X+4: cofactors 2/(2X+4) and 4/(2X+4).
        let p = Polynomial::from_i64(&[4, 2]);
        let cofs = coefficient_cofactors(&p, &v).unwrap();
        assert_eq!(cofs.len(), 2);
        assert_eq!(cofs[0], rf(&[4], &[4, 2]));
        assert_eq!(cofs[1], rf(&[2], &[4, 2]));
        // A constant's only cofactor is 1.
        let c = Polynomial::from_i64(&[7]);
        assert_eq!(coefficient_cofactors(&c, &v).unwrap(), vec![RationalFunction::one()]);
        assert!(coefficient_cofactors(&Polynomial::<Rational>::zero(), &v).is_err());
    }

    #[test]
    fn same_value_polynomial_over_the_rationals() {
        let v = RationalDivisorValuation::default();
        let toolkit = RationalIdealToolkit;
        // f = (X+1)/2: the result has content {2:-1} = w(f).
        let f = rf(&[1, 1], &[2]);
        let p = polynomial_with_same_value(&f, &v, &toolkit).unwrap();
        assert_eq!(content_value(&p, &v).unwrap(), vv(&[("p:2", -1)]));
        // A polynomial input comes back unchanged (u = 1 when s = 1).
        let g = rf(&[4, 6], &[1]);
        let p = polynomial_with_same_value(&g, &v, &toolkit).unwrap();
        assert_eq!(p, Polynomial::from_i64(&[4, 6]));
        assert_eq!(content_value(&p, &v).unwrap(), w_value(&g, &v).unwrap());
    }

    #[test]
    fn same_value_polynomial_over_the_quadratic_base() {
        let ctx = QuadContext::new(-5).unwrap();
        let v = QuadDivisorValuation::new(ctx);
        let toolkit = QuadIdealToolkit::new(ctx);
        // f = 1/(2X + (1+√-5)): content ideal of the denominator is ℘₂;
        // its inverse is generated by 1 and (1+√-5)/2, so u = 1 + ((1+√-5)/2)X
        // has content {℘₂:-1} = w(f).
        let s = Polynomial::from_coeffs(vec![
            ctx.from_integers(1, 1),
            QuadElement::from_int(2),
        ]);
        let f = RationalFunction::new(Polynomial::one(), s).unwrap();
        let p = polynomial_with_same_value(&f, &v, &toolkit).unwrap();
        assert_eq!(content_value(&p, &v).unwrap(), vv(&[("q:2:ram", -1)]));
        assert_eq!(content_value(&p, &v).unwrap(), w_value(&f, &v).unwrap());
    }

    #[test]
    fn contraction_examples() {
        let v = RationalDivisorValuation::default();
        let toolkit = RationalIdealToolkit;
        // J = (2X+4): coefficients {4, 2} generate (2) in ℤ.
        let ideal = KroneckerRingIdeal::new(&v, vec![rf(&[4, 2], &[1])]).unwrap();
        let gens = contract_ideal(&v, &toolkit, &ideal).unwrap();
        assert_eq!(rational_content(&gens).unwrap(), Rational::from_integer(2.into()));

        // J = (1) contracts to the unit ideal.
        let unit = KroneckerRingIdeal::new(&v, vec![RationalFunction::one()]).unwrap();
        let gens = contract_ideal(&v, &toolkit, &unit).unwrap();
        assert_eq!(rational_content(&gens).unwrap(), Rational::from_integer(1.into()));
    }

    #[test]
    fn contraction_recovers_the_quadratic_prime() {
        let ctx = QuadContext::new(-5).unwrap();
        let v = QuadDivisorValuation::new(ctx);
        let toolkit = QuadIdealToolkit::new(ctx);
        let gen = RationalFunction::from_poly(Polynomial::from_coeffs(vec![
            ctx.from_integers(1, 1),
            QuadElement::from_int(2),
        ]));
        let ideal = KroneckerRingIdeal::new(&v, vec![gen]).unwrap();
        let gens = contract_ideal(&v, &toolkit, &ideal).unwrap();
        // The generator is already a polynomial, so its own coefficients
        // come off: {1+sqrt(-5), 2}.
        let rendered: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        assert_eq!(rendered, vec!["1+sqrt(-5)", "2"]);
        let contracted = toolkit.content_ideal(&gens).unwrap();
        let p2 = QuadIdeal::from_generators(
            ctx,
            &[QuadElement::from_int(2), ctx.from_integers(1, 1)],
        )
        .unwrap();
        assert_eq!(contracted, p2);
    }

    #[test]
    fn ideal_equality_by_value() {
        let v = RationalDivisorValuation::default();
        let a = KroneckerRingIdeal::new(&v, vec![rf(&[2], &[1]), rf(&[0, 1], &[1])]).unwrap();
        let b = KroneckerRingIdeal::new(&v, vec![rf(&[2, 0, 1], &[1])]).unwrap();
        assert!(rw_ideal_equal(&v, &a, &b).unwrap());

        let two = KroneckerRingIdeal::new(&v, vec![rf(&[2], &[1])]).unwrap();
        let four = KroneckerRingIdeal::new(&v, vec![rf(&[4], &[1])]).unwrap();
        assert!(!rw_ideal_equal(&v, &two, &four).unwrap());
    }

    #[test]
    fn roundtrip_convexity_over_the_rationals() {
        let v = RationalDivisorValuation::default();
        let toolkit = RationalIdealToolkit;
        let gens = vec![Rational::from_integer(2.into())];
        let probes: Vec<Rational> = [6, 3, 10, 1, 0, -4]
            .iter()
            .map(|&n| Rational::from_integer(n.into()))
            .collect();
        let mixers = vec![rf(&[1, 1], &[2, 1]), RationalFunction::x()];
        assert!(extend_contract_roundtrip_check(&v, &toolkit, &gens, &probes, &mixers).unwrap());
    }
}
