//! Fractional ideals of ℤ[√d] in canonical Hermite normal form.
//!
//! A nonzero fractional ideal is (1/den)·M where M is a full-rank
//! ℤ-submodule of ℤ[√d], closed under multiplication by √d, with basis
//! rows (a, 0) and (b, c) in coordinates (1, √d). Canonical form: a, c > 0,
//! 0 ≤ b < a, den > 0, and gcd(den, a, b, c) = 1, so ideal equality is
//! plain data equality.

use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::number_rings::{QuadContext, QuadElement};
use crate::{Int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadIdeal {
    ctx: QuadContext,
    den: Int,
    a: Int,
    b: Int,
    c: Int,
}

/// Hermite normal form of the ℤ-span of the given coordinate vectors.
/// Returns (a, b, c) for rows (a, 0), (b, c). Errors unless the span has
/// full rank 2.
fn hnf(vectors: Vec<(Int, Int)>) -> Result<(Int, Int, Int)> {
    let vectors: Vec<(Int, Int)> = vectors
        .into_iter()
        .filter(|(x, y)| !(x.is_zero() && y.is_zero()))
        .collect();
    if vectors.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    // Sweep the second coordinate down to a single gcd-achieving vector,
    // collecting the eliminated first coordinates. Each pairwise step is
    // unimodular, so the span never changes.
    let mut carry: Option<(Int, Int)> = None;
    let mut xs: Vec<Int> = Vec::new();
    for (x, y) in vectors {
        if y.is_zero() {
            xs.push(x);
            continue;
        }
        carry = Some(match carry.take() {
            None => (x, y),
            Some((cx, cy)) => {
                let eg = cy.extended_gcd(&y);
                let g = eg.gcd;
                let combined = (eg.x * &cx + eg.y * &x, g.clone());
                xs.push((&y / &g) * &cx - (&cy / &g) * &x);
                combined
            }
        });
    }
    let Some((mut bx, mut c)) = carry else {
        return Err(Error::InvalidArgument(
            "module spans no sqrt(d) component; not a full-rank ideal".into(),
        ));
    };
    if c.is_negative() {
        bx = -bx;
        c = -c;
    }
    let mut a = Int::zero();
    for x in &xs {
        a = a.gcd(x);
    }
    if a.is_zero() {
        return Err(Error::InvalidArgument(
            "module has rank 1; not a nonzero ideal".into(),
        ));
    }
    let b = bx.mod_floor(&a);
    Ok((a, b, c))
}

impl QuadIdeal {
    fn build(ctx: QuadContext, den: Int, vectors: Vec<(Int, Int)>) -> Result<Self> {
        let (a, b, c) = hnf(vectors)?;
        debug_assert!(den.is_positive());
        let content = den.gcd(&a).gcd(&b).gcd(&c);
        Ok(QuadIdeal {
            ctx,
            den: &den / &content,
            a: &a / &content,
            b: &b / &content,
            c: &c / &content,
        })
    }

    /// The fractional ideal generated by the given elements (not all zero).
    pub fn from_generators(ctx: QuadContext, gens: &[QuadElement]) -> Result<Self> {
        let nonzero: Vec<&QuadElement> = gens.iter().filter(|g| !g.is_zero()).collect();
        if nonzero.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        // Common denominator over all coordinates.
        let mut den = Int::one();
        for g in &nonzero {
            den = den.lcm(g.rational_part().denom()).lcm(g.sqrt_part().denom());
        }
        let d = Int::from(ctx.d());
        let mut vectors = Vec::with_capacity(nonzero.len() * 2);
        for g in &nonzero {
            let x = (g.rational_part() * Rational::from_integer(den.clone())).to_integer();
            let y = (g.sqrt_part() * Rational::from_integer(den.clone())).to_integer();
            // g and g·√d together span the O_K-module generated by g.
            vectors.push((x.clone(), y.clone()));
            vectors.push((&y * &d, x));
        }
        Self::build(ctx, den, vectors)
    }

    /// The ring of integers ℤ[√d] itself, the identity of the ideal group.
    pub fn unit(ctx: QuadContext) -> Self {
        QuadIdeal { ctx, den: Int::one(), a: Int::one(), b: Int::zero(), c: Int::one() }
    }

    /// The principal ideal (x), x ≠ 0.
    pub fn principal(ctx: QuadContext, x: &QuadElement) -> Result<Self> {
        Self::from_generators(ctx, std::slice::from_ref(x))
    }

    pub fn context(&self) -> QuadContext {
        self.ctx
    }

    pub fn denominator(&self) -> &Int {
        &self.den
    }

    /// The HNF rows ((a, 0), (b, c)) of the numerator module.
    pub fn basis_rows(&self) -> [(Int, Int); 2] {
        [(self.a.clone(), Int::zero()), (self.b.clone(), self.c.clone())]
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    /// The two basis elements (a + 0√d)/den and (b + c√d)/den.
    pub fn basis_elements(&self) -> [QuadElement; 2] {
        let den = Rational::from_integer(self.den.clone());
        [
            self.ctx.element(
                Rational::from_integer(self.a.clone()) / den.clone(),
                Rational::zero(),
            ),
            self.ctx.element(
                Rational::from_integer(self.b.clone()) / den.clone(),
                Rational::from_integer(self.c.clone()) / den,
            ),
        ]
    }

    /// The absolute norm a·c/den².
    pub fn norm(&self) -> Rational {
        Rational::new(&self.a * &self.c, &self.den * &self.den)
    }

    fn assert_same_context(&self, other: &Self) {
        assert_eq!(self.ctx, other.ctx, "mixed quadratic contexts");
    }

    /// Ideal product: the span of pairwise basis products.
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_context(other);
        let d = Int::from(self.ctx.d());
        let rows_l = self.basis_rows();
        let rows_r = other.basis_rows();
        let mut vectors = Vec::with_capacity(4);
        for (x1, y1) in &rows_l {
            for (x2, y2) in &rows_r {
                vectors.push((x1 * x2 + y1 * y2 * &d, x1 * y2 + y1 * x2));
            }
        }
        Self::build(self.ctx, &self.den * &other.den, vectors)
            .expect("product of nonzero ideals is nonzero")
    }

    /// I + J, the smallest ideal containing both: the infimum under the
    /// reverse-inclusion order.
    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_context(other);
        let den = self.den.lcm(&other.den);
        let scale_l = &den / &self.den;
        let scale_r = &den / &other.den;
        let mut vectors = Vec::with_capacity(4);
        for (x, y) in self.basis_rows() {
            vectors.push((x * &scale_l, y * &scale_l));
        }
        for (x, y) in other.basis_rows() {
            vectors.push((x * &scale_r, y * &scale_r));
        }
        Self::build(self.ctx, den, vectors).expect("sum of nonzero ideals is nonzero")
    }

    /// The conjugate ideal (image under √d ↦ −√d).
    pub fn conjugate(&self) -> Self {
        let vectors = vec![
            (self.a.clone(), Int::zero()),
            (self.b.clone(), -self.c.clone()),
        ];
        Self::build(self.ctx, self.den.clone(), vectors).expect("conjugate is nonzero")
    }

    /// Multiply by a nonzero rational scalar (as a principal ideal; the
    /// sign is immaterial).
    pub fn scale(&self, q: &Rational) -> Self {
        assert!(!q.is_zero(), "cannot scale an ideal by zero");
        let num = q.numer().abs();
        let mut vectors = Vec::with_capacity(2);
        for (x, y) in self.basis_rows() {
            vectors.push((x * &num, y * &num));
        }
        Self::build(self.ctx, &self.den * q.denom(), vectors).expect("scaled ideal is nonzero")
    }

    /// The inverse in the group of fractional ideals: conj(I)/N(I).
    /// ℤ[√d] is the maximal order here, so every nonzero ideal is
    /// invertible.
    pub fn inverse(&self) -> Self {
        let inv = self.conjugate().scale(&self.norm().recip());
        debug_assert_eq!(self.mul(&inv), Self::unit(self.ctx));
        inv
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::unit(self.ctx);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact membership: x lies in the ℤ-span of the basis over the
    /// denominator.
    pub fn contains(&self, x: &QuadElement) -> bool {
        if let Some(cx) = x.context() {
            assert_eq!(cx, self.ctx, "mixed quadratic contexts");
        }
        if x.is_zero() {
            return true;
        }
        let den = Rational::from_integer(self.den.clone());
        let p = x.rational_part() * den.clone();
        let q = x.sqrt_part() * den;
        if !p.is_integer() || !q.is_integer() {
            return false;
        }
        let (p, q) = (p.to_integer(), q.to_integer());
        // Solve s·(a,0) + t·(b,c) = (p,q) over ℤ.
        let (t, rem) = q.div_rem(&self.c);
        if !rem.is_zero() {
            return false;
        }
        (&p - &t * &self.b).is_multiple_of(&self.a)
    }

    /// True iff every element of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &Self) -> bool {
        other.basis_elements().iter().all(|e| self.contains(e))
    }
}

impl fmt::Display for QuadIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{},0],[{},{}]]/{}",
            self.a, self.b, self.c, self.den
        )
    }
}

/// Exhaustive search for a generator x = a + b√d with |a|, |b| ≤ bound and
/// |N(x)| = N(I). `None` means none found within the bound; for imaginary
/// d with bound ≥ ⌈√N(I)⌉ + |d| the norm equation makes that a proof of
/// non-principality; for real d it is only bounded evidence.
pub fn is_principal_search(ideal: &QuadIdeal, bound: u64) -> Result<Option<QuadElement>> {
    if !ideal.is_integral() {
        return Err(Error::InvalidArgument(
            "principal search expects an integral ideal".into(),
        ));
    }
    let ctx = ideal.context();
    let target = ideal.norm();
    let bound = bound as i64;
    for a in 0..=bound {
        for b in 0..=bound {
            if a == 0 && b == 0 {
                continue;
            }
            let sign_pairs: &[(i64, i64)] = match (a == 0, b == 0) {
                (true, _) => &[(1, 1), (1, -1)],
                (_, true) => &[(1, 1), (-1, 1)],
                _ => &[(1, 1), (1, -1), (-1, 1), (-1, -1)],
            };
            for &(sa, sb) in sign_pairs {
                let x = ctx.from_integers(sa * a, sb * b);
                let norm = x.norm();
                let abs_norm = if norm.is_negative() { -norm } else { norm };
                if abs_norm != target {
                    continue;
                }
                if QuadIdeal::principal(ctx, &x)? == *ideal {
                    return Ok(Some(x));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx5() -> QuadContext {
        QuadContext::new(-5).unwrap()
    }

    fn rows(ideal: &QuadIdeal) -> (i64, i64, i64, i64) {
        use num_traits::ToPrimitive;
        let [(a, _), (b, c)] = ideal.basis_rows();
        (
            a.to_i64().unwrap(),
            b.to_i64().unwrap(),
            c.to_i64().unwrap(),
            ideal.denominator().to_i64().unwrap(),
        )
    }

    #[test]
    fn hnf_of_the_classical_nonprincipal_ideal() {
        // (2, 1 + √-5): HNF rows (2,0),(1,1).
        let ctx = ctx5();
        let p2 = QuadIdeal::from_generators(
            ctx,
            &[QuadElement::from_int(2), ctx.from_integers(1, 1)],
        )
        .unwrap();
        assert_eq!(rows(&p2), (2, 1, 1, 1));
        assert_eq!(p2.norm(), Rational::from_integer(2.into()));
    }

    #[test]
    fn inert_prime_is_principal_with_diagonal_hnf() {
        let ctx = ctx5();
        let p11 = QuadIdeal::principal(ctx, &QuadElement::from_int(11)).unwrap();
        assert_eq!(rows(&p11), (11, 0, 11, 1));
        assert_eq!(p11.norm(), Rational::from_integer(121.into()));
    }

    #[test]
    fn ramified_square_is_two() {
        let ctx = ctx5();
        let p2 = QuadIdeal::from_generators(
            ctx,
            &[QuadElement::from_int(2), ctx.from_integers(1, 1)],
        )
        .unwrap();
        let two = QuadIdeal::principal(ctx, &QuadElement::from_int(2)).unwrap();
        assert_eq!(p2.mul(&p2), two);
    }

    #[test]
    fn identity_and_sum() {
        let ctx = ctx5();
        let p3 = QuadIdeal::from_generators(
            ctx,
            &[QuadElement::from_int(3), ctx.from_integers(1, 1)],
        )
        .unwrap();
        assert_eq!(p3.mul(&QuadIdeal::unit(ctx)), p3);

        let p2 = QuadIdeal::from_generators(
            ctx,
            &[QuadElement::from_int(2), ctx.from_integers(1, 1)],
        )
        .unwrap();
        // Norms 2 and 3 are coprime, so the sum is the whole ring.
        assert_eq!(p2.add(&p3), QuadIdeal::unit(ctx));
    }

    #[test]
    fn membership_examples() {
        let ctx = ctx5();
        let p2 = QuadIdeal::from_generators(
            ctx,
            &[QuadElement::from_int(2), ctx.from_integers(1, 1)],
        )
        .unwrap();
        assert!(p2.contains(&QuadElement::from_int(2)));
        assert!(!p2.contains(&QuadElement::from_int(1)), "proper ideal");
        assert!(p2.contains(&QuadElement::zero()));
        assert!(p2.contains(&ctx.from_integers(1, 1)));
        assert!(!p2.contains(&ctx.element(
            Rational::new(1.into(), 2.into()),
            Rational::new(1.into(), 2.into()),
        )));
    }

    #[test]
    fn inverse_in_the_ideal_group() {
        let ctx = ctx5();
        let p2 = QuadIdeal::from_generators(
            ctx,
            &[QuadElement::from_int(2), ctx.from_integers(1, 1)],
        )
        .unwrap();
        let inv = p2.inverse();
        assert_eq!(p2.mul(&inv), QuadIdeal::unit(ctx));
        // ℘₂⁻¹ = ℘₂/2 is generated by 1 and (1+√-5)/2.
        let half = Rational::new(1.into(), 2.into());
        assert!(inv.contains(&QuadElement::one()));
        assert!(inv.contains(&ctx.element(half.clone(), half)));
    }

    #[test]
    fn principal_search_examples() {
        let ctx = ctx5();
        let p2 = QuadIdeal::from_generators(
            ctx,
            &[QuadElement::from_int(2), ctx.from_integers(1, 1)],
        )
        .unwrap();
        // a² + 5b² = 2 has no integer solutions.
        assert_eq!(is_principal_search(&p2, 100).unwrap(), None);

        let two = QuadIdeal::principal(ctx, &QuadElement::from_int(2)).unwrap();
        let gen = is_principal_search(&two, 100).unwrap().unwrap();
        assert_eq!(QuadIdeal::principal(ctx, &gen).unwrap(), two);

        // In ℤ[i] the ideal (2, 1+i) is principal with generator 1+i.
        let gauss = QuadContext::new(-1).unwrap();
        let p = QuadIdeal::from_generators(
            gauss,
            &[QuadElement::from_int(2), gauss.from_integers(1, 1)],
        )
        .unwrap();
        let g = is_principal_search(&p, 100).unwrap().unwrap();
        assert_eq!(g.norm(), Rational::from_integer(2.into()));
        assert_eq!(QuadIdeal::principal(gauss, &g).unwrap(), p);
    }

    #[test]
    fn fractional_normalization_is_canonical() {
        let ctx = ctx5();
        let half = QuadElement::rational(Rational::new(1.into(), 2.into()));
        let i1 = QuadIdeal::from_generators(ctx, &[half]).unwrap();
        let i2 = QuadIdeal::principal(ctx, &QuadElement::from_int(1)).unwrap();
        assert_eq!(i1, i2.scale(&Rational::new(1.into(), 2.into())));
        assert_eq!(i1.norm(), Rational::new(1.into(), 4.into()));
        // Scaling by 2 brings it back to the unit ideal.
        assert_eq!(i1.scale(&Rational::from_integer(2.into())), QuadIdeal::unit(ctx));
    }
}
