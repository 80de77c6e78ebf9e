//! Prime splitting in ℤ[√d] and the prime-ideal divisor valuation.
//!
//! Valuations are computed by bounded brute-force membership in successive
//! ideal powers, not by localization formulas: every exponent is certified
//! by the exact membership oracle of the HNF module.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::number_rings::factor::{factor_integer, DEFAULT_FACTOR_BOUND};
use crate::number_rings::{QuadContext, QuadElement, QuadIdeal};
use crate::valuation_core::DemiValuation;
use crate::value_groups::{ExtendedValue, PrimeLabel, QuadPrimeKind, ValueVector};
use crate::{Int, Rational};

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Square root of a mod an odd prime p (Tonelli–Shanks), or `None` for a
/// non-residue. Requires 0 < a < p.
fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    debug_assert!(a > 0 && a < p && p % 2 == 1);
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(pow_mod(a, (p + 1) / 4, p));
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while pow_mod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0u32;
        let mut probe = t;
        while probe != 1 {
            probe = mul_mod(probe, probe, p);
            i += 1;
        }
        let b = pow_mod(c, 1u64 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

/// The prime-ideal labels above a rational prime p.
///
/// p ramifies iff p | 4d (for d ≡ 2, 3 (mod 4) this always includes 2);
/// an odd p ∤ d splits iff d is a quadratic residue mod p, with the split+
/// label carrying the smaller root in [1, p/2].
pub fn quad_splitting_type(ctx: QuadContext, p: u64) -> Vec<PrimeLabel> {
    let d = ctx.d();
    let d_mod = (d as i128).rem_euclid(p as i128) as u64;
    if p == 2 || d_mod == 0 {
        return vec![PrimeLabel::QuadPrime { p, kind: QuadPrimeKind::Ramified, root: None }];
    }
    match sqrt_mod(d_mod, p) {
        Some(r) => {
            let plus = r.min(p - r);
            vec![
                PrimeLabel::QuadPrime {
                    p,
                    kind: QuadPrimeKind::SplitPlus,
                    root: Some(plus),
                },
                PrimeLabel::QuadPrime {
                    p,
                    kind: QuadPrimeKind::SplitMinus,
                    root: Some(p - plus),
                },
            ]
        }
        None => vec![PrimeLabel::QuadPrime { p, kind: QuadPrimeKind::Inert, root: None }],
    }
}

/// The root r₀ with r₀² ≡ d (mod p) for a ramified prime.
fn ramified_root(ctx: QuadContext, p: u64) -> i64 {
    if p == 2 && ctx.d().rem_euclid(2) == 1 {
        1
    } else {
        0
    }
}

/// The prime ideal named by a quadratic label: (p) for inert p, otherwise
/// the HNF of (p, √d − r).
pub fn prime_ideal_of_label(ctx: QuadContext, label: &PrimeLabel) -> Result<QuadIdeal> {
    let PrimeLabel::QuadPrime { p, kind, root } = label else {
        return Err(Error::InvalidLabel(format!(
            "{label} does not name a quadratic prime"
        )));
    };
    if !quad_splitting_type(ctx, *p).contains(label) {
        return Err(Error::InvalidLabel(format!(
            "{label} is inconsistent with d = {}",
            ctx.d()
        )));
    }
    let p_i64 = i64::try_from(*p)
        .map_err(|_| Error::InvalidArgument(format!("prime {p} too large")))?;
    let p_elem = QuadElement::from_int(p_i64);
    match kind {
        QuadPrimeKind::Inert => QuadIdeal::principal(ctx, &p_elem),
        QuadPrimeKind::Ramified => {
            let r = ramified_root(ctx, *p);
            let gen = ctx.sqrt_d() - QuadElement::from_int(r);
            QuadIdeal::from_generators(ctx, &[p_elem, gen])
        }
        QuadPrimeKind::SplitPlus | QuadPrimeKind::SplitMinus => {
            let r = root.expect("split label carries a root") as i64;
            let gen = ctx.sqrt_d() - QuadElement::from_int(r);
            QuadIdeal::from_generators(ctx, &[p_elem, gen])
        }
    }
}

/// N(℘): p for ramified/split labels, p² for inert ones.
pub fn label_norm(label: &PrimeLabel) -> Result<Int> {
    let PrimeLabel::QuadPrime { p, kind, .. } = label else {
        return Err(Error::InvalidLabel(format!(
            "{label} does not name a quadratic prime"
        )));
    };
    let p = Int::from(*p);
    Ok(match kind {
        QuadPrimeKind::Inert => &p * &p,
        _ => p,
    })
}

/// Exponent of p in a nonzero integer.
fn int_p_valuation(n: &Int, p: u64) -> u32 {
    let mut c = n.abs();
    let mut e = 0u32;
    while (&c % p).is_zero() && !c.is_zero() {
        c /= p;
        e += 1;
    }
    e
}

/// Largest k with y ∈ ℘ᵏ for integral y ≠ 0, by brute-force membership in
/// successive powers. Bounded above by 2·νₚ(N(y)) since ν℘(p) ≤ 2.
fn integral_valuation(y: &QuadElement, ideal: &QuadIdeal, p: u64) -> i64 {
    let norm = y.norm().to_integer();
    let cap = 2 * int_p_valuation(&norm, p) as i64;
    let mut k = 0i64;
    let mut power = ideal.clone();
    while k < cap && power.contains(y) {
        k += 1;
        power = power.mul(ideal);
    }
    if k == cap {
        debug_assert!(cap == 0 || !power.contains(y), "valuation exceeded its norm cap");
    }
    k
}

fn denominator_lcm(x: &QuadElement) -> Int {
    x.rational_part().denom().lcm(x.sqrt_part().denom())
}

/// Exponent of ℘ in the principal ideal (x): membership brute force on
/// the integral numerator minus the same for the denominator.
pub fn prime_ideal_valuation(
    ctx: QuadContext,
    x: &QuadElement,
    label: &PrimeLabel,
) -> Result<i64> {
    if x.is_zero() {
        return Err(Error::InvalidArgument(
            "the zero element has no finite valuation".into(),
        ));
    }
    let PrimeLabel::QuadPrime { p, .. } = label else {
        return Err(Error::InvalidLabel(format!(
            "{label} does not name a quadratic prime"
        )));
    };
    let ideal = prime_ideal_of_label(ctx, label)?;
    let n = denominator_lcm(x);
    let n_rat = QuadElement::rational(Rational::from_integer(n.clone()));
    let y = x.clone() * n_rat.clone();
    let vy = integral_valuation(&y, &ideal, *p);
    let vn = if n.is_one() {
        0
    } else {
        integral_valuation(&n_rat, &ideal, *p)
    };
    Ok(vy - vn)
}

/// The full divisor valuation of ℚ(√d): factor the norm of the integral
/// part and the denominator, then take per-prime-ideal exponents. The
/// support is finite because only primes dividing N(y) or n can appear.
pub fn quad_divisor_valuation(
    ctx: QuadContext,
    x: &QuadElement,
    factor_bound: u64,
) -> Result<ExtendedValue> {
    if x.is_zero() {
        return Ok(ExtendedValue::Infinity);
    }
    let n = denominator_lcm(x);
    let n_rat = QuadElement::rational(Rational::from_integer(n.clone()));
    let y = x.clone() * n_rat.clone();
    let norm_y = y.norm().to_integer();

    let mut primes: Vec<u64> = factor_integer(&norm_y, factor_bound)?
        .into_iter()
        .map(|(p, _)| p)
        .collect();
    if !n.is_one() {
        primes.extend(factor_integer(&n, factor_bound)?.into_iter().map(|(p, _)| p));
    }
    primes.sort();
    primes.dedup();

    let mut entries = Vec::new();
    for p in primes {
        for label in quad_splitting_type(ctx, p) {
            let ideal = prime_ideal_of_label(ctx, &label)?;
            let mut e = integral_valuation(&y, &ideal, p);
            if !n.is_one() && (&n % p).is_zero() {
                e -= integral_valuation(&n_rat, &ideal, p);
            }
            if e != 0 {
                entries.push((label, e));
            }
        }
    }
    Ok(ExtendedValue::Finite(ValueVector::from_entries(entries)))
}

/// Re-multiply prime ideal powers named by a value vector back into a
/// fractional ideal; the factorization–HNF consistency oracle.
pub fn ideal_from_valuation(ctx: QuadContext, vector: &ValueVector) -> Result<QuadIdeal> {
    let mut acc = QuadIdeal::unit(ctx);
    for (label, e) in vector.entries() {
        let ideal = prime_ideal_of_label(ctx, label)?;
        let part = if *e >= 0 {
            ideal.pow(*e as u32)
        } else {
            ideal.inverse().pow((-*e) as u32)
        };
        acc = acc.mul(&part);
    }
    Ok(acc)
}

/// The ℤ-divisor valuation of the Dedekind domain ℤ[√d].
#[derive(Debug, Clone)]
pub struct QuadDivisorValuation {
    ctx: QuadContext,
    pub factor_bound: u64,
    name: String,
    universe: String,
}

impl QuadDivisorValuation {
    pub fn new(ctx: QuadContext) -> Self {
        QuadDivisorValuation {
            ctx,
            factor_bound: DEFAULT_FACTOR_BOUND,
            name: format!("quad-divisor({})", ctx.d()),
            universe: format!("prime ideals of Z[sqrt({})]", ctx.d()),
        }
    }

    pub fn context(&self) -> QuadContext {
        self.ctx
    }
}

impl DemiValuation for QuadDivisorValuation {
    type Elem = QuadElement;

    fn name(&self) -> &str {
        &self.name
    }

    fn evaluate(&self, x: &QuadElement) -> Result<ExtendedValue> {
        quad_divisor_valuation(self.ctx, x, self.factor_bound)
    }

    fn label_universe(&self) -> &str {
        &self.universe
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx5() -> QuadContext {
        QuadContext::new(-5).unwrap()
    }

    fn label(text: &str) -> PrimeLabel {
        PrimeLabel::parse(text).unwrap()
    }

    #[test]
    fn splitting_types_for_minus_five() {
        let ctx = ctx5();
        // 1² = 1 ≡ -5 (mod 3): split with roots {1, 2}.
        assert_eq!(
            quad_splitting_type(ctx, 3),
            vec![label("q:3:split+:1"), label("q:3:split-:2")]
        );
        // -5 ≡ 6 mod 11 and the squares mod 11 are {1,3,4,5,9}: inert.
        assert_eq!(quad_splitting_type(ctx, 11), vec![label("q:11:inert")]);
        assert_eq!(quad_splitting_type(ctx, 5), vec![label("q:5:ram")]);
        assert_eq!(quad_splitting_type(ctx, 2), vec![label("q:2:ram")]);
    }

    #[test]
    fn modular_square_roots() {
        for (a, p) in [(2u64, 7u64), (4, 13), (9, 17), (5, 41), (10, 13)] {
            match sqrt_mod(a % p, p) {
                Some(r) => assert_eq!(mul_mod(r, r, p), a % p, "sqrt of {a} mod {p}"),
                None => {
                    for r in 1..p {
                        assert_ne!(mul_mod(r, r, p), a % p, "{a} is a square mod {p}");
                    }
                }
            }
        }
    }

    #[test]
    fn prime_ideals_in_hnf() {
        use num_traits::ToPrimitive;
        let ctx = ctx5();
        let rows = |i: &QuadIdeal| {
            let [(a, _), (b, c)] = i.basis_rows();
            (a.to_i64().unwrap(), b.to_i64().unwrap(), c.to_i64().unwrap())
        };
        let p2 = prime_ideal_of_label(ctx, &label("q:2:ram")).unwrap();
        assert_eq!(rows(&p2), (2, 1, 1));
        let p11 = prime_ideal_of_label(ctx, &label("q:11:inert")).unwrap();
        assert_eq!(rows(&p11), (11, 0, 11));
        // (3, √d − 1): rows (3,0),(r',1) with r' ≡ -1 ≡ 2 (mod 3).
        let p3 = prime_ideal_of_label(ctx, &label("q:3:split+:1")).unwrap();
        assert_eq!(rows(&p3), (3, 2, 1));
        assert!(prime_ideal_of_label(ctx, &label("q:3:split+:2")).is_err());
        assert!(prime_ideal_of_label(ctx, &label("p:3")).is_err());
    }

    #[test]
    fn power_membership_valuations() {
        let ctx = ctx5();
        let two = QuadElement::from_int(2);
        assert_eq!(prime_ideal_valuation(ctx, &two, &label("q:2:ram")).unwrap(), 2);
        let x = ctx.from_integers(1, 1);
        assert_eq!(prime_ideal_valuation(ctx, &x, &label("q:3:split-:2")).unwrap(), 1);
        assert_eq!(prime_ideal_valuation(ctx, &x, &label("q:3:split+:1")).unwrap(), 0);
        let one = QuadElement::one();
        for l in ["q:2:ram", "q:3:split+:1", "q:11:inert"] {
            assert_eq!(prime_ideal_valuation(ctx, &one, &label(l)).unwrap(), 0);
        }
    }

    #[test]
    fn divisor_valuation_examples() {
        let ctx = ctx5();
        let v = QuadDivisorValuation::new(ctx);
        // 6 = 2·3, (2) = ℘₂², (3) = ℘₃⁺·℘₃⁻.
        let six = v.evaluate(&QuadElement::from_int(6)).unwrap();
        let expected = ExtendedValue::Finite(ValueVector::from_entries([
            (label("q:2:ram"), 2),
            (label("q:3:split+:1"), 1),
            (label("q:3:split-:2"), 1),
        ]));
        assert_eq!(six, expected);

        // (1+√-5)/2: ν(1+√-5) − ν(2) componentwise; 1+√-5 lies in the
        // split- ideal (3, √d − 2).
        let half = Rational::new(1.into(), 2.into());
        let x = ctx.element(half.clone(), half);
        let val = v.evaluate(&x).unwrap();
        let expected = ExtendedValue::Finite(ValueVector::from_entries([
            (label("q:2:ram"), -1),
            (label("q:3:split-:2"), 1),
        ]));
        assert_eq!(val, expected);

        assert_eq!(v.evaluate(&QuadElement::one()).unwrap(), ExtendedValue::zero());
        assert_eq!(v.evaluate(&QuadElement::zero()).unwrap(), ExtendedValue::Infinity);
    }

    #[test]
    fn valuation_rebuilds_the_principal_ideal() {
        let ctx = ctx5();
        let v = QuadDivisorValuation::new(ctx);
        for (a, b) in [(1i64, 1i64), (6, 0), (3, 2), (-2, 5), (7, 1)] {
            let x = ctx.from_integers(a, b);
            let val = v.evaluate(&x).unwrap();
            let vector = val.finite().unwrap();
            let rebuilt = ideal_from_valuation(ctx, vector).unwrap();
            assert_eq!(rebuilt, QuadIdeal::principal(ctx, &x).unwrap(), "x = {x}");
        }
    }
}
