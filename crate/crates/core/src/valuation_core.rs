//! The demi-valuation contract and its constructive consequences.
//!
//! A demi-valuation is a map ν: K* → G into a lattice-ordered abelian
//! group with ν(ab) = ν(a) + ν(b) and ν(a+b) ≥ inf(ν(a), ν(b)), extended
//! by ν(0) = ∞. The axioms are universally quantified over an infinite
//! field, so they are verified on samples; each individual check is exact.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::value_groups::{ExtendedValue, OrderingResult, PrimeLabel, ValueVector};

/// An evaluatable demi-valuation on a field K.
///
/// Implementations must be pure: the same element always evaluates to the
/// same value, and instances are immutable after construction, so they can
/// be shared freely across threads.
pub trait DemiValuation {
    /// The field the valuation is defined on.
    type Elem: Field;

    fn name(&self) -> &str;

    /// ν(x), with ν(0) = ∞. Errors are environmental (a factorization
    /// bound was exceeded), never axiom violations.
    fn evaluate(&self, x: &Self::Elem) -> Result<ExtendedValue>;

    /// One-line description of the label universe the values live in.
    fn label_universe(&self) -> &str;

    /// An element πᵢ with ν(πᵢ) the unit vector at `label`, when the
    /// instance can produce one.
    fn representative(&self, label: &PrimeLabel) -> Option<Self::Elem> {
        let _ = label;
        None
    }
}

/// One sampled pair that violated an axiom.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub a: String,
    pub b: String,
    /// Which law failed: `multiplicative` or `ultrametric`.
    pub law: String,
    pub detail: String,
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}) violates {}: {}", self.a, self.b, self.law, self.detail)
    }
}

/// Result of checking the two axioms over a list of sample pairs.
/// `failures` is empty iff every sampled pair satisfied both axioms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub samples: usize,
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check ν(ab) = ν(a) + ν(b) and ν(a+b) ≥ inf(ν(a), ν(b)) for each pair,
/// with the ∞ conventions covering zeros. Violations are recorded as data;
/// only evaluation itself can error.
pub fn axiom_report<V: DemiValuation>(
    v: &V,
    pairs: &[(V::Elem, V::Elem)],
) -> Result<AxiomReport> {
    let mut failures = Vec::new();
    for (a, b) in pairs {
        let va = v.evaluate(a)?;
        let vb = v.evaluate(b)?;

        let product = a.clone() * b.clone();
        let v_prod = v.evaluate(&product)?;
        let expected = va.add(&vb);
        if v_prod != expected {
            failures.push(AxiomFailure {
                a: a.to_string(),
                b: b.to_string(),
                law: "multiplicative".into(),
                detail: format!("ν(ab) = {v_prod} but ν(a)+ν(b) = {expected}"),
            });
        }

        let sum = a.clone() + b.clone();
        let v_sum = v.evaluate(&sum)?;
        let bound = va.meet(&vb);
        if !matches!(
            v_sum.compare(&bound),
            OrderingResult::Greater | OrderingResult::Equal
        ) {
            failures.push(AxiomFailure {
                a: a.to_string(),
                b: b.to_string(),
                law: "ultrametric".into(),
                detail: format!("ν(a+b) = {v_sum} not ≥ inf(ν(a), ν(b)) = {bound}"),
            });
        }
    }
    failures.sort_by(|x, y| (&x.a, &x.b, &x.law).cmp(&(&y.a, &y.b, &y.law)));
    Ok(AxiomReport { samples: pairs.len(), failures })
}

/// True iff x lies in the valuation ring R(ν) = {x : ν(x) ≥ 0}.
pub fn in_valuation_ring<V: DemiValuation>(v: &V, x: &V::Elem) -> Result<bool> {
    Ok(v.evaluate(x)?.is_nonnegative())
}

/// Witness for the Bézout property at one pair: m = c·x + d·y with
/// c, d ∈ R(ν) and ν(m) = inf(ν(x), ν(y)).
#[derive(Debug, Clone, PartialEq)]
pub struct BezoutCertificate<E> {
    pub x: E,
    pub y: E,
    pub c: E,
    pub d: E,
    pub m: E,
}

/// Check all three certificate invariants exactly.
pub fn verify_bezout_certificate<V: DemiValuation>(
    v: &V,
    cert: &BezoutCertificate<V::Elem>,
) -> Result<bool> {
    let combination =
        cert.c.clone() * cert.x.clone() + cert.d.clone() * cert.y.clone();
    if combination != cert.m {
        return Ok(false);
    }
    if !in_valuation_ring(v, &cert.c)? || !in_valuation_ring(v, &cert.d)? {
        return Ok(false);
    }
    let meet = v.evaluate(&cert.x)?.meet(&v.evaluate(&cert.y)?);
    Ok(v.evaluate(&cert.m)? == meet)
}

/// Output of folding Bézout certificates over a generator list: a single
/// generator of the ideal, with the evidence that it belongs to the ideal
/// and that every original generator is a multiple of it.
#[derive(Debug, Clone)]
pub struct PrincipalGenerator<E> {
    /// m with ν(m) = inf over the generators.
    pub generator: E,
    /// gᵢ/m for each input generator, each in R(ν).
    pub cofactors: Vec<E>,
    /// The verified certificate produced at each fold step.
    pub chain: Vec<BezoutCertificate<E>>,
}

/// Fold a Bézout combiner pairwise over the generators of a finitely
/// generated ideal inside R(ν), producing a principal generator.
///
/// Zero generators are dropped first; if none remain the generator is 0
/// with no cofactors. Each certificate from the combiner is verified, and
/// an invalid one aborts with the failing pair identified.
pub fn principal_generator_from_bezout<V, F>(
    v: &V,
    gens: &[V::Elem],
    combiner: F,
) -> Result<PrincipalGenerator<V::Elem>>
where
    V: DemiValuation,
    F: Fn(&V::Elem, &V::Elem) -> Result<BezoutCertificate<V::Elem>>,
{
    if gens.is_empty() {
        return Err(Error::InvalidArgument(
            "principal generator of an empty generator list is undefined".into(),
        ));
    }
    for g in gens {
        if !in_valuation_ring(v, g)? {
            return Err(Error::InvalidArgument(format!(
                "generator {g} is not in the valuation ring"
            )));
        }
    }
    let nonzero: Vec<&V::Elem> = gens.iter().filter(|g| !g.is_zero()).collect();
    let Some((first, rest)) = nonzero.split_first() else {
        // All generators are zero: the zero ideal.
        return Ok(PrincipalGenerator {
            generator: V::Elem::zero(),
            cofactors: Vec::new(),
            chain: Vec::new(),
        });
    };

    let mut m: V::Elem = (*first).clone();
    let mut chain = Vec::new();
    for g in rest {
        let cert = combiner(&m, g)?;
        if cert.x != m || cert.y != **g {
            return Err(Error::InvalidCertificate {
                x: m.to_string(),
                y: g.to_string(),
                reason: "certificate is for a different pair".into(),
            });
        }
        if !verify_bezout_certificate(v, &cert)? {
            return Err(Error::InvalidCertificate {
                x: m.to_string(),
                y: g.to_string(),
                reason: "certificate invariants do not hold".into(),
            });
        }
        m = cert.m.clone();
        chain.push(cert);
    }

    let mut cofactors = Vec::with_capacity(gens.len());
    for g in gens {
        let q = g.clone() / m.clone();
        if !in_valuation_ring(v, &q)? {
            return Err(Error::InvalidArgument(format!(
                "cofactor {q} of generator {g} left the valuation ring"
            )));
        }
        cofactors.push(q);
    }
    Ok(PrincipalGenerator { generator: m, cofactors, chain })
}

/// Divide out the irreducible representatives named by ν(x): the result
/// u = x / ∏ᵢ πᵢ^{νᵢ(x)} has ν(u) = 0, the constructive content of the
/// surjective-divisor-valuation characterization of UFDs.
pub fn reconstruct_unit<V: DemiValuation>(v: &V, x: &V::Elem) -> Result<V::Elem> {
    if x.is_zero() {
        return Err(Error::InvalidArgument(
            "cannot reconstruct a unit from zero".into(),
        ));
    }
    let value = v.evaluate(x)?;
    let vector: &ValueVector = match &value {
        ExtendedValue::Finite(vec) => vec,
        ExtendedValue::Infinity => {
            return Err(Error::InvalidArgument(
                "nonzero element evaluated to infinity".into(),
            ))
        }
    };
    let mut u = x.clone();
    for (label, exp) in vector.entries() {
        let rep = v
            .representative(label)
            .ok_or_else(|| Error::MissingRepresentative { label: label.to_string() })?;
        u = u / rep.powi(*exp);
    }
    Ok(u)
}
