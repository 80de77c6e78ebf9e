//! Seeded property suites.
//!
//! Each suite draws its randomness from a ChaCha stream whose seed is
//! derived from the master seed and the suite name, so `check` output is
//! bit-reproducible and suites can run in any order. Failures are data:
//! a suite returns the offending samples rather than panicking.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::function_field::{
    basis_witness, coefficient_cofactors, content_value, contract_ideal,
    extend_contract_roundtrip_check, extend_ideal, is_integer_polynomial, kronecker_factor, rw_ideal_equal, rw_principal_generator, w_value, ContentValuation,
    KroneckerRingIdeal, Polynomial, QuadIdealToolkit, RationalFunction, RationalIdealToolkit,
    TValuation, UValuation,
};
use crate::number_rings::{
    ideal_from_valuation, is_principal_search, label_norm, QuadContext, QuadDivisorValuation, QuadElement,
    QuadIdeal, RationalDivisorValuation,
};
use crate::valuation_core::{axiom_report, in_valuation_ring, reconstruct_unit, DemiValuation};
use crate::value_groups::{
    minimal_in_set, ExtendedValue, OrderingResult, PrimeLabel, ValueVector,
};
use crate::Rational;

/// Outcome of one suite run.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub samples: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Shared knobs for a suite run.
#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    pub samples: usize,
    pub factor_bound: u64,
    pub degree_bound: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 42,
            samples: 200,
            factor_bound: crate::number_rings::DEFAULT_FACTOR_BOUND,
            degree_bound: crate::function_field::DEFAULT_DEGREE_BOUND,
        }
    }
}

fn fnv1a(text: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in text.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Per-suite stream: the master seed mixed with the suite name.
fn suite_rng(cfg: &SuiteConfig, name: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed ^ fnv1a(name))
}

pub const SUITE_NAMES: &[&str] = &[
    "axioms/rational",
    "axioms/quad-minus5",
    "axioms/quad-minus1",
    "axioms/w-rational",
    "axioms/w-quad",
    "axioms/t",
    "axioms/u",
    "ring-closure",
    "minimal-descent",
    "ideal-group-laws",
    "gauss-kronecker/rational",
    "gauss-kronecker/quad",
    "bezout-construction",
    "rw-principal-generator",
    "dedekind-oracle",
    "non-pid-witness",
    "coefficient-cofactors",
    "ideal-correspondence",
    "u-membership",
    "basis-witness",
    "reconstruct-unit",
    "factor-exhaustive",
];

/// Run one suite by name.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<SuiteResult> {
    let mut rng = suite_rng(cfg, name);
    match name {
        "axioms/rational" => axioms_rational(cfg, &mut rng),
        "axioms/quad-minus5" => axioms_quad(cfg, &mut rng, -5),
        "axioms/quad-minus1" => axioms_quad(cfg, &mut rng, -1),
        "axioms/w-rational" => axioms_w_rational(cfg, &mut rng),
        "axioms/w-quad" => axioms_w_quad(cfg, &mut rng),
        "axioms/t" => axioms_t(cfg, &mut rng),
        "axioms/u" => axioms_u(cfg, &mut rng),
        "ring-closure" => ring_closure(cfg, &mut rng),
        "minimal-descent" => minimal_descent(cfg, &mut rng),
        "ideal-group-laws" => ideal_group_laws(cfg, &mut rng),
        "gauss-kronecker/rational" => gauss_kronecker_rational(cfg, &mut rng),
        "gauss-kronecker/quad" => gauss_kronecker_quad(cfg, &mut rng),
        "bezout-construction" => bezout_construction(cfg, &mut rng),
        "rw-principal-generator" => rw_pgen_suite(cfg, &mut rng),
        "dedekind-oracle" => dedekind_oracle(cfg, &mut rng),
        "non-pid-witness" => non_pid_witness(cfg),
        "coefficient-cofactors" => cofactors_suite(cfg, &mut rng),
        "ideal-correspondence" => ideal_correspondence(cfg, &mut rng),
        "u-membership" => u_membership(cfg, &mut rng),
        "basis-witness" => basis_witness_suite(cfg, &mut rng),
        "reconstruct-unit" => reconstruct_unit_suite(cfg, &mut rng),
        "factor-exhaustive" => factor_exhaustive(cfg),
        other => Err(Error::InvalidArgument(format!("unknown suite `{other}`"))),
    }
}

/// Run every suite, results sorted by name.
pub fn run_all(cfg: &SuiteConfig) -> Result<Vec<SuiteResult>> {
    let mut out = Vec::with_capacity(SUITE_NAMES.len());
    for name in SUITE_NAMES {
        out.push(run_suite(name, cfg)?);
    }
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}

fn result(name: &str, samples: usize, failures: Vec<String>) -> Result<SuiteResult> {
    let mut failures = failures;
    if failures.len() > 20 {
        let extra = failures.len() - 20;
        failures.truncate(20);
        failures.push(format!("... and {extra} more"));
    }
    Ok(SuiteResult { name: name.to_string(), samples, failures })
}

// ---- Samplers ----

/// Denominator pool with lcm 12, so that sums of sampled fractions keep
/// certifiably factorable numerators without capping the prime support:
/// big primes (up to the 10⁴ limit) appear in numerators.
const DENOMS: &[i64] = &[1, 2, 3, 4, 6, 12];
const BIG_PRIMES: &[i64] = &[97, 101, 9973];

fn rand_rational(rng: &mut ChaCha8Rng) -> Rational {
    let den = DENOMS[rng.gen_range(0..DENOMS.len())];
    let num = if rng.gen_bool(0.25) {
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        sign * BIG_PRIMES[rng.gen_range(0..BIG_PRIMES.len())]
    } else {
        rng.gen_range(-60i64..=60)
    };
    Rational::new(num.into(), den.into())
}

fn rand_integer(rng: &mut ChaCha8Rng) -> Rational {
    Rational::from_integer(rng.gen_range(-60i64..=60).into())
}

fn rand_quad(rng: &mut ChaCha8Rng, ctx: QuadContext) -> QuadElement {
    let small = |rng: &mut ChaCha8Rng| {
        Rational::new(rng.gen_range(-8i64..=8).into(), rng.gen_range(1i64..=2).into())
    };
    ctx.element(small(rng), small(rng))
}

fn rand_quad_integral(rng: &mut ChaCha8Rng, ctx: QuadContext, bound: i64) -> QuadElement {
    ctx.from_integers(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
}

fn rand_poly<K, F>(rng: &mut ChaCha8Rng, max_deg: usize, mut coeff: F) -> Polynomial<K>
where
    K: crate::field::Field,
    F: FnMut(&mut ChaCha8Rng) -> K,
{
    let deg = rng.gen_range(0..=max_deg);
    let coeffs: Vec<K> = (0..=deg).map(|_| coeff(rng)).collect();
    Polynomial::from_coeffs(coeffs)
}

fn rand_nonzero_poly<K, F>(rng: &mut ChaCha8Rng, max_deg: usize, mut coeff: F) -> Polynomial<K>
where
    K: crate::field::Field,
    F: FnMut(&mut ChaCha8Rng) -> K,
{
    loop {
        let p = rand_poly(rng, max_deg, &mut coeff);
        if !p.is_zero() {
            return p;
        }
    }
}

fn small_int_coeff(rng: &mut ChaCha8Rng) -> Rational {
    Rational::from_integer(rng.gen_range(-5i64..=5).into())
}

/// Random element of ℚ(X) with numerator and denominator of degree ≤ 3,
/// integer coefficients small enough to keep factorization instant.
fn rand_ratfunc_small(rng: &mut ChaCha8Rng) -> RationalFunction<Rational> {
    let num = rand_poly(rng, 3, small_int_coeff);
    let den = rand_nonzero_poly(rng, 2, small_int_coeff);
    RationalFunction::new(num, den).expect("denominator is nonzero")
}

/// Random member of R(w) over an integral base: an integral-coefficient
/// polynomial divided by a monic integral polynomial (whose content is 0).
fn rand_rw_member<K, F>(
    rng: &mut ChaCha8Rng,
    max_deg: usize,
    mut integral_coeff: F,
) -> RationalFunction<K>
where
    K: crate::field::Field,
    F: FnMut(&mut ChaCha8Rng) -> K,
{
    let num = rand_poly(rng, max_deg, &mut integral_coeff);
    let den = if rng.gen_bool(0.5) {
        Polynomial::one()
    } else {
        let deg = rng.gen_range(1..=2);
        let mut coeffs: Vec<K> = (0..deg).map(|_| integral_coeff(rng)).collect();
        coeffs.push(K::one());
        Polynomial::from_coeffs(coeffs)
    };
    RationalFunction::new(num, den).expect("denominator is nonzero")
}

// ---- Axiom suites ----

fn axioms_failures<V: DemiValuation>(
    v: &V,
    pairs: &[(V::Elem, V::Elem)],
) -> Result<Vec<String>> {
    let report = axiom_report(v, pairs)?;
    Ok(report.failures.iter().map(|f| f.to_string()).collect())
}

fn axioms_rational(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<SuiteResult> {
    let v = RationalDivisorValuation { factor_bound: cfg.factor_bound };
    let mut pairs = vec![
        (Rational::zero(), Rational::zero()),
        (Rational::zero(), rand_rational(rng)),
    ];
    while pairs.len() < cfg.samples {
        pairs.push((rand_rational(rng), rand_rational(rng)));
    }
    result("axioms/rational", pairs.len(), axioms_failures(&v, &pairs)?)
}

fn axioms_quad(cfg: &SuiteConfig, rng: &mut ChaCha8Rng, d: i64) -> Result<SuiteResult> {
    let ctx = QuadContext::new(d)?;
    let mut v = QuadDivisorValuation::new(ctx);
    v.factor_bound = cfg.factor_bound;
    let mut pairs = vec![(QuadElement::zero(), QuadElement::zero())];
    while pairs.len() < cfg.samples {
        pairs.push((rand_quad(rng, ctx), rand_quad(rng, ctx)));
    }
    let name = format!("axioms/quad-minus{}", -d);
    let failures = axioms_failures(&v, &pairs)?;
    result(&name, pairs.len(), failures)
}

fn axioms_w_rational(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<SuiteResult> {
    let base = RationalDivisorValuation { factor_bound: cfg.factor_bound };
    let v = ContentValuation::new(base);
    let mut pairs = vec![(RationalFunction::zero(), RationalFunction::zero())];
    while pairs.len() < cfg.samples {
        let f = RationalFunction::new(
            rand_poly(rng, 4, rand_rational),
            rand_nonzero_poly(rng, 3, rand_rational),
        )
        .expect("nonzero denominator");
        let g = RationalFunction::new(
            rand_poly(rng, 4, rand_rational),
            rand_nonzero_poly(rng, 3, rand_rational),
        )
        .expect("nonzero denominator");
        pairs.push((f, g));
    }
    result("axioms/w-rational", pairs.len(), axioms_failures(&v, &pairs)?)
}

fn axioms_w_quad(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<SuiteResult> {
    let ctx = QuadContext::new(-5)?;
    let mut base = QuadDivisorValuation::new(ctx);
    base.factor_bound = cfg.factor_bound;
    let v = ContentValuation::new(base);
    let mut pairs = vec![(RationalFunction::zero(), RationalFunction::one())];
    while pairs.len() < cfg.samples {
        let f = RationalFunction::new(
            rand_poly(rng, 3, |r| rand_quad(r, ctx)),
            rand_nonzero_poly(rng, 2, |r| rand_quad(r, ctx)),
        )
        .expect("nonzero denominator");
        let g = RationalFunction::new(
            rand_poly(rng, 3, |r| rand_quad(r, ctx)),
            rand_nonzero_poly(rng, 2, |r| rand_quad(r, ctx)),
        )
        .expect("nonzero denominator");
        pairs.push((f, g));
    }
    result("axioms/w-quad", pairs.len(), axioms_failures(&v, &pairs)?)
}

fn axioms_t(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<SuiteResult> {
    let v = TValuation { degree_bound: cfg.degree_bound, factor_bound: cfg.factor_bound };
    let mut pairs = vec![(RationalFunction::zero(), rand_ratfunc_small(rng))];
    while pairs.len() < cfg.samples {
        pairs.push((rand_ratfunc_small(rng), rand_ratfunc_small(rng)));
    }
    result("axioms/t", pairs.len(), axioms_failures(&v, &pairs)?)
}

fn axioms_u(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<SuiteResult> {
    let v = UValuation { degree_bound: cfg.degree_bound, factor_bound: cfg.factor_bound };
    let mut pairs = vec![(RationalFunction::zero(), RationalFunction::zero())];
    while pairs.len() < cfg.samples {
        pairs.push((rand_ratfunc_small(rng), rand_ratfunc_small(rng)));
    }
    result("axioms/u", pairs.len(), axioms_failures(&v, &pairs)?)
}

// ---- Structural suites ----

/// R(ν) closure under + and ×, over ℚ and ℚ(√-5).
fn ring_closure(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<SuiteResult> {
    let mut failures = Vec::new();
    let v = RationalDivisorValuation { factor_bound: cfg.factor_bound };
    let ctx = QuadContext::new(-5)?;
    let qv = QuadDivisorValuation::new(ctx);
    for _ in 0..cfg.samples {
        let x = rand_integer(rng);
        let y = rand_integer(rng);
        if !in_valuation_ring(&v, &(x.clone() + y.clone()))?
            || !in_valuation_ring(&v, &(x.clone() * y.clone()))?
        {
            failures.push(format!("rational closure violated at ({x}, {y})"));
        }
        let a = rand_quad_integral(rng, ctx, 15);
        let b = rand_quad_integral(rng, ctx, 15);
        if !in_valuation_ring(&qv, &(a.clone() + b.clone()))?
            || !in_valuation_ring(&qv, &(a.clone() * b.clone()))?
        {
            failures.push(format!("quad closure violated at ({a}, {b})"));
        }
    }
    result("ring-closure", cfg.samples, failures)
}

/// Finite descent in the positive cone: minimal_in_set returns a member
/// with nothing strictly below it (exhaustive pairwise oracle).
fn minimal_descent(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<SuiteResult> {
    let labels: Vec<PrimeLabel> = [2u64, 3, 5, 7]
        .iter()
        .map(|&p| PrimeLabel::rational_prime(p).expect("prime"))
        .collect();
    let mut failures = Vec::new();
    for _ in 0..cfg.samples {
        let set: Vec<ValueVector> = (0..rng.gen_range(1..=6))
            .map(|_| {
                ValueVector::from_entries(
                    labels
                        .iter()
                        .map(|l| (l.clone(), rng.gen_range(0i64..=3)))
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        let m = minimal_in_set(&set)?;
        if !set.contains(&m) {
            failures.push(format!("minimal element {m} is not a member"));
        }
        if set.iter().any(|s| s.compare(&m) == OrderingResult::Less) {
            failures.push(format!("{m} is not minimal in its set"));
        }
    }
    result("minimal-descent", cfg.samples, failures)
}

/// Group laws of fractional ideals under multiplication and the
/// reverse-inclusion order, with ideal_add as the meet.
fn ideal_group_laws(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<SuiteResult> {
    let ctx = QuadContext::new(-5)?;
    let mut failures = Vec::new();
    let rand_ideal = |rng: &mut ChaCha8Rng| -> Result<QuadIdeal> {
        let mut gens = Vec::new();
        for _ in 0..rng.gen_range(1..=2) {
            let g = loop {
                let g = rand_quad_integral(rng, ctx, 8);
                if !g.is_zero() {
                    break g;
                }
            };
            gens.push(g);
        }
        QuadIdeal::from_generators(ctx, &gens)
    };
    let samples = cfg.samples.max(1);
    for _ in 0..samples {
        let i = rand_ideal(rng)?;
        let j = rand_ideal(rng)?;
        let h = rand_ideal(rng)?;
        if i.mul(&j) != j.mul(&i) {
            failures.push(format!("commutativity failed at ({i}, {j})"));
        }
        if i.mul(&j).mul(&h) != i.mul(&j.mul(&h)) {
            failures.push(format!("associativity failed at ({i}, {j}, {h})"));
        }
        if i.mul(&QuadIdeal::unit(ctx)) != i {
            failures.push(format!("unit ideal is not neutral at {i}"));
        }
        if i.mul(&j).inverse() != i.inverse().mul(&j.inverse()) {
            failures.push(format!("inverse is not a homomorphism at ({i}, {j})"));
        }
        // Reverse-inclusion compatibility: I ⊇ J ⟹ IH ⊇ JH.
        let sub = i.mul(&j); // I·J ⊆ I (integral ideals)
        if i.is_integral() && j.is_integral() {
            if !i.contains_ideal(&sub) {
                failures.push(format!("product {sub} escaped {i}"));
            }
            if !i.mul(&h).contains_ideal(&sub.mul(&h)) {
                failures.push(format!("order not preserved by multiplication at ({i}, {j}, {h})"));
            }
        }
        // Meet property of the sum.
        let meet = i.add(&j);
        if !meet.contains_ideal(&i) || !meet.contains_ideal(&j) {
            failures.push(format!("{meet} does not contain both {i} and {j}"));
        }
        let container = meet.add(&h);
        if !container.contains_ideal(&meet) {
            failures.push(format!("common container {container} misses the meet {meet}"));
        }
    }
    result("ideal-group-laws", samples, failures)
}

// ---- Content valuation suites ----

fn gauss_kronecker_over<V>(
    name: &str,
    v: &V,
    cfg: &SuiteConfig,
    rng: &mut ChaCha8Rng,
    mut coeff: impl FnMut(&mut ChaCha8Rng) -> V::Elem,
) -> Result<SuiteResult>
where
    V: DemiValuation,
{
    let mut failures = Vec::new();
    for _ in 0..cfg.samples {
        let f: Polynomial<V::Elem> = rand_poly(rng, 8, &mut coeff);
        let g: Polynomial<V::Elem> = rand_poly(rng, 8, &mut coeff);
        let lhs = content_value(&(&f * &g), v)?;
        let rhs = content_value(&f, v)?.add(&content_value(&g, v)?);
        if lhs != rhs {
            failures.push(format!("w(fg) = {lhs} but w(f)+w(g) = {rhs} at f={f}, g={g}"));
        }
    }
    result(name, cfg.samples, failures)
}

fn gauss_kronecker_rational(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<SuiteResult> {
    let v = RationalDivisorValuation { factor_bound: cfg.factor_bound };
    gauss_kronecker_over("gauss-kronecker/rational", &v, cfg, rng, rand_rational)
}

fn gauss_kronecker_quad(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<SuiteResult> {
    let ctx = QuadContext::new(-5)?;
    let mut v = QuadDivisorValuation::new(ctx);
    v.factor_bound = cfg.factor_bound;
    gauss_kronecker_over("gauss-kronecker/quad", &v, cfg, rng, |r| rand_quad(r, ctx))
}

/// w(X^{deg q + 1}·p + q) = inf(w(p), w(q)) on random pairs, both bases.
fn bezout_construction(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<SuiteResult> {
    let mut failures = Vec::new();
    let rational = RationalDivisorValuation { factor_bound: cfg.factor_bound };
    let ctx = QuadContext::new(-5)?;
    let quad = QuadDivisorValuation::new(ctx);

    fn check<V: DemiValuation>(
        v: &V,
        p: Polynomial<V::Elem>,
        q: Polynomial<V::Elem>,
        failures: &mut Vec<String>,
    ) -> Result<()> {
        let h = q.degree().expect("q nonzero") + 1;
        let combo = &p.shift_up(h) + &q;
        let got = content_value(&combo, v)?;
        let want = content_value(&p, v)?.meet(&content_value(&q, v)?);
        if got != want {
            failures.push(format!("w(X^{h}·p+q) = {got} ≠ {want} at p={p}, q={q}"));
        }
        Ok(())
    }

    let half = cfg.samples / 2;
    for _ in 0..half {
        let p = rand_poly(rng, 4, rand_rational);
        let q = rand_nonzero_poly(rng, 4, rand_rational);
        check(&rational, p, q, &mut failures)?;
    }
    for _ in half..cfg.samples {
        let p = rand_poly(rng, 3, |r| rand_quad(r, ctx));
        let q = rand_nonzero_poly(rng, 3, |r| rand_quad(r, ctx));
        check(&quad, p, q, &mut failures)?;
    }
    result("bezout-construction", cfg.samples, failures)
}

/// Principal generators of random finitely generated ideals of R(w):
/// value = meet, all cofactors in R(w), certificate chain re-evaluates.
/// (All three are enforced inside rw_principal_generator; the suite
/// verifies it returns and spot-checks the value independently.)
fn rw_pgen_suite(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<SuiteResult> {
    let mut failures = Vec::new();
    let rational = RationalDivisorValuation { factor_bound: cfg.factor_bound };
    let ctx = QuadContext::new(-5)?;
    let quad = QuadDivisorValuation::new(ctx);

    fn run_one<V: DemiValuation>(
        v: &V,
        gens: Vec<RationalFunction<V::Elem>>,
        failures: &mut Vec<String>,
    ) -> Result<()> {
        let rendered: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        let ideal = KroneckerRingIdeal::new(v, gens)?;
        match rw_principal_generator(v, &ideal) {
            Ok(out) => {
                let mut meet = ExtendedValue::Infinity;
                for g in ideal.generators() {
                    meet = meet.meet(&w_value(g, v)?);
                }
                if out.value != meet {
                    failures.push(format!(
                        "generator value {} differs from meet {} for [{}]",
                        out.value,
                        meet,
                        rendered.join(", ")
                    ));
                }
            }
            Err(e) => failures.push(format!("[{}]: {e}", rendered.join(", "))),
        }
        Ok(())
    }

    let half = cfg.samples / 2;
    for i in 0..cfg.samples {
        let n = rng.gen_range(1..=4);
        if i < half {
            let gens = (0..n)
                .map(|_| rand_rw_member(rng, 3, rand_integer))
                .collect();
            run_one(&rational, gens, &mut failures)?;
        } else {
            let gens = (0..n)
                .map(|_| rand_rw_member(rng, 2, |r| rand_quad_integral(r, ctx, 8)))
                .collect();
            run_one(&quad, gens, &mut failures)?;
        }
    }
    result("rw-principal-generator", cfg.samples, failures)
}

/// Norm bookkeeping and factorization–HNF consistency for ℚ(√-5):
/// ∏ N(℘)^{ν℘(x)} = |N(x)| and the prime powers remultiply to (x).
fn dedekind_oracle(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<SuiteResult> {
    let ctx = QuadContext::new(-5)?;
    let v = QuadDivisorValuation::new(ctx);
    let mut failures = Vec::new();
    for _ in 0..cfg.samples {
        let x = loop {
            let x = rand_quad_integral(rng, ctx, 30);
            if !x.is_zero() {
                break x;
            }
        };
        let value = v.evaluate(&x)?;
        let vector = value.finite().expect("nonzero element");
        let mut norm_product = Rational::one();
        for (label, e) in vector.entries() {
            let n = Rational::from_integer(label_norm(label)?);
            let mut power = Rational::one();
            for _ in 0..e.unsigned_abs() {
                power *= n.clone();
            }
            if *e < 0 {
                power = power.recip();
            }
            norm_product *= power;
        }
        let norm_x = x.norm();
        let abs_norm = if norm_x.is_negative() { -norm_x } else { norm_x };
        if norm_product != abs_norm {
            failures.push(format!("norm bookkeeping broke at {x}: {norm_product} vs {abs_norm}"));
        }
        let rebuilt = ideal_from_valuation(ctx, vector)?;
        if rebuilt != QuadIdeal::principal(ctx, &x)? {
            failures.push(format!("prime powers do not rebuild ({x})"));
        }
    }
    result("dedekind-oracle", cfg.samples, failures)
}

/// The classical witness: ℘₂ = (2, 1+√-5) is not principal in ℤ[√-5]
/// (complete bounded norm search), yet its extension to R(w) is principal
/// with generator 2X + (1+√-5).
fn non_pid_witness(cfg: &SuiteConfig) -> Result<SuiteResult> {
    let ctx = QuadContext::new(-5)?;
    let mut v = QuadDivisorValuation::new(ctx);
    v.factor_bound = cfg.factor_bound;
    let mut failures = Vec::new();

    let one_plus = ctx.from_integers(1, 1);
    let p2 = QuadIdeal::from_generators(ctx, &[QuadElement::from_int(2), one_plus.clone()])?;
    if let Some(g) = is_principal_search(&p2, 100)? {
        failures.push(format!("(2, 1+sqrt(-5)) unexpectedly principal with generator {g}"));
    }

    let ideal = KroneckerRingIdeal::new(
        &v,
        vec![
            RationalFunction::constant(QuadElement::from_int(2)),
            RationalFunction::constant(one_plus.clone()),
        ],
    )?;
    let out = rw_principal_generator(&v, &ideal)?;
    let expected = RationalFunction::from_poly(Polynomial::from_coeffs(vec![
        one_plus,
        QuadElement::from_int(2),
    ]));
    if out.generator != expected {
        failures.push(format!("R(w) generator is {} instead of 2X+(1+sqrt(-5))", out.generator));
    }
    result("non-pid-witness", 1, failures)
}

/// Every coefficient cofactor aᵢ/p lies in R(w), both bases.
fn cofactors_suite(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<SuiteResult> {
    let mut failures = Vec::new();
    let rational = RationalDivisorValuation { factor_bound: cfg.factor_bound };
    let ctx = QuadContext::new(-5)?;
    let quad = QuadDivisorValuation::new(ctx);
    let half = cfg.samples / 2;
    for i in 0..cfg.samples {
        if i < half {
            let p = rand_nonzero_poly(rng, 4, rand_rational);
            if let Err(e) = coefficient_cofactors(&p, &rational) {
                failures.push(format!("{p}: {e}"));
            }
        } else {
            let p = rand_nonzero_poly(rng, 3, |r| rand_quad(r, ctx));
            if let Err(e) = coefficient_cofactors(&p, &quad) {
                failures.push(format!("{p}: {e}"));
            }
        }
    }
    result("coefficient-cofactors", cfg.samples, failures)
}

/// The contraction/extension bijection on finitely generated ideals, both
/// directions, both bases.
fn ideal_correspondence(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<SuiteResult> {
    let mut failures = Vec::new();
    let rational = RationalDivisorValuation { factor_bound: cfg.factor_bound };
    let rational_toolkit = RationalIdealToolkit;
    let ctx = QuadContext::new(-5)?;
    let quad = QuadDivisorValuation::new(ctx);
    let quad_toolkit = QuadIdealToolkit::new(ctx);

    fn one_direction<V, T>(
        v: &V,
        toolkit: &T,
        base_gens: Vec<V::Elem>,
        probes: Vec<V::Elem>,
        mixers: Vec<RationalFunction<V::Elem>>,
        rw_gens: Vec<RationalFunction<V::Elem>>,
        failures: &mut Vec<String>,
    ) -> Result<()>
    where
        V: DemiValuation,
        T: crate::function_field::IdealToolkit<Elem = V::Elem>,
    {
        // 𝔟 → 𝔟R(w) → contract: same meet of values, and the convexity
        // check passes.
        let rendered: Vec<String> = base_gens.iter().map(|g| g.to_string()).collect();
        let extended = extend_ideal(v, &base_gens)?;
        let contracted = contract_ideal(v, toolkit, &extended)?;
        let mut meet_before = ExtendedValue::Infinity;
        for g in &base_gens {
            meet_before = meet_before.meet(&v.evaluate(g)?);
        }
        let mut meet_after = ExtendedValue::Infinity;
        for g in &contracted {
            meet_after = meet_after.meet(&v.evaluate(g)?);
        }
        if meet_before != meet_after {
            failures.push(format!(
                "contract(extend(b)) changed the meet for b = [{}]",
                rendered.join(", ")
            ));
        }
        if !extend_contract_roundtrip_check(v, toolkit, &base_gens, &probes, &mixers)? {
            failures.push(format!("convexity check failed for b = [{}]", rendered.join(", ")));
        }

        // J → contract → extend: equal as R(w)-ideals.
        let ideal = KroneckerRingIdeal::new(v, rw_gens)?;
        let contracted = contract_ideal(v, toolkit, &ideal)?;
        let back = extend_ideal(v, &contracted)?;
        if !rw_ideal_equal(v, &ideal, &back)? {
            let rendered: Vec<String> =
                ideal.generators().iter().map(|g| g.to_string()).collect();
            failures.push(format!(
                "extend(contract(J)) is a different ideal for J = [{}]",
                rendered.join(", ")
            ));
        }
        Ok(())
    }

    let half = cfg.samples / 2;
    for i in 0..cfg.samples {
        if i < half {
            let base_gens: Vec<Rational> = (0..rng.gen_range(1..=3))
                .map(|_| loop {
                    let g = rand_integer(rng);
                    if !g.is_zero() {
                        break g;
                    }
                })
                .collect();
            let probes: Vec<Rational> = (0..8).map(|_| rand_integer(rng)).collect();
            let mixers = vec![
                rand_rw_member(rng, 2, rand_integer),
                RationalFunction::x(),
            ];
            let rw_gens: Vec<RationalFunction<Rational>> = (0..rng.gen_range(1..=3))
                .map(|_| rand_rw_member(rng, 2, rand_integer))
                .filter(|g| !g.is_zero())
                .collect();
            let rw_gens = if rw_gens.is_empty() {
                vec![RationalFunction::one()]
            } else {
                rw_gens
            };
            one_direction(
                &rational,
                &rational_toolkit,
                base_gens,
                probes,
                mixers,
                rw_gens,
                &mut failures,
            )?;
        } else {
            let base_gens: Vec<QuadElement> = (0..rng.gen_range(1..=2))
                .map(|_| loop {
                    let g = rand_quad_integral(rng, ctx, 6);
                    if !g.is_zero() {
                        break g;
                    }
                })
                .collect();
            let probes: Vec<QuadElement> =
                (0..8).map(|_| rand_quad_integral(rng, ctx, 10)).collect();
            let mixers = vec![
                rand_rw_member(rng, 2, |r| rand_quad_integral(r, ctx, 4)),
                RationalFunction::x(),
            ];
            let rw_gens: Vec<RationalFunction<QuadElement>> = (0..rng.gen_range(1..=2))
                .map(|_| rand_rw_member(rng, 2, |r| rand_quad_integral(r, ctx, 4)))
                .filter(|g| !g.is_zero())
                .collect();
            let rw_gens = if rw_gens.is_empty() {
                vec![RationalFunction::one()]
            } else {
                rw_gens
            };
            one_direction(
                &quad,
                &quad_toolkit,
                base_gens,
                probes,
                mixers,
                rw_gens,
                &mut failures,
            )?;
        }
    }
    result("ideal-correspondence", cfg.samples, failures)
}

/// u-membership agrees with the syntactic integer-polynomial test on
/// samples constructed half inside ℤ[X], half outside.
fn u_membership(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<SuiteResult> {
    let mut failures = Vec::new();
    for i in 0..cfg.samples {
        let f = if i % 2 == 0 {
            // Inside: an integer polynomial.
            RationalFunction::from_poly(rand_poly(rng, 3, small_int_coeff))
        } else if rng.gen_bool(0.5) {
            // Outside: a non-integer rational coefficient.
            let mut coeffs: Vec<Rational> =
                (0..=rng.gen_range(0..=3)).map(|_| small_int_coeff(rng)).collect();
            let idx = rng.gen_range(0..coeffs.len());
            coeffs[idx] = Rational::new(
                rng.gen_range(1i64..=7).into(),
                rng.gen_range(2i64..=7).into(),
            );
            RationalFunction::from_poly(Polynomial::from_coeffs(coeffs))
        } else {
            // Outside: a genuine denominator (guaranteed by making the
            // numerator coprime to it: 1 over something nonconstant).
            let mut den_coeffs: Vec<Rational> =
                (0..rng.gen_range(1..=2)).map(|_| small_int_coeff(rng)).collect();
            den_coeffs.push(Rational::one());
            RationalFunction::new(
                Polynomial::one(),
                Polynomial::from_coeffs(den_coeffs),
            )
            .expect("monic denominator")
        };
        let syntactic = is_integer_polynomial(&f);
        let via_u = crate::function_field::u_member(&f, cfg.degree_bound, cfg.factor_bound)?;
        if syntactic != via_u {
            failures.push(format!("u disagrees with syntax on {f}: u={via_u}, syntactic={syntactic}"));
        }
    }
    result("u-membership", cfg.samples, failures)
}

/// basis_witness values are exact unit vectors under u.
fn basis_witness_suite(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<SuiteResult> {
    let u = UValuation { degree_bound: cfg.degree_bound, factor_bound: cfg.factor_bound };
    let mut failures = Vec::new();
    let mut count = 0usize;
    while count < cfg.samples {
        let label = if count.is_multiple_of(2) {
            let primes = [2u64, 3, 5, 7, 11, 13, 97, 101, 9973];
            PrimeLabel::rational_prime(primes[rng.gen_range(0..primes.len())])
                .expect("pool is prime")
        } else {
            // Labels from factoring a random small polynomial.
            let p = rand_nonzero_poly(rng, 3, small_int_coeff);
            if p.is_constant() {
                continue;
            }
            let factored = kronecker_factor(&p, cfg.degree_bound, cfg.factor_bound)?;
            let (poly, _) = &factored.factors[0];
            PrimeLabel::IrreduciblePoly(crate::value_groups::LabelPoly::new(
                poly.coeffs().to_vec(),
            )?)
        };
        let witness = basis_witness(&label)?;
        let got = u.evaluate(&witness)?;
        let want = ExtendedValue::Finite(ValueVector::unit(label.clone()));
        if got != want {
            failures.push(format!("witness for {label} has u = {got}"));
        }
        count += 1;
    }
    result("basis-witness", count, failures)
}

/// reconstruct_unit under u returns elements of value 0.
fn reconstruct_unit_suite(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<SuiteResult> {
    let u = UValuation { degree_bound: cfg.degree_bound, factor_bound: cfg.factor_bound };
    let mut failures = Vec::new();
    for _ in 0..cfg.samples {
        let f = loop {
            let f = rand_ratfunc_small(rng);
            if !f.is_zero() {
                break f;
            }
        };
        match reconstruct_unit(&u, &f) {
            Ok(unit) => {
                let value = u.evaluate(&unit)?;
                if value != ExtendedValue::zero() {
                    failures.push(format!("unit of {f} has value {value}"));
                }
            }
            Err(e) => failures.push(format!("{f}: {e}")),
        }
    }
    result("reconstruct-unit", cfg.samples, failures)
}

/// Independent reducibility oracle for degree 2 and 3: a primitive integer
/// polynomial is reducible over ℚ iff some primitive integer linear
/// factor aX+b with a | leading and b | constant divides it.
fn linear_divisor_oracle(f: &Polynomial<Rational>) -> bool {
    use num_traits::ToPrimitive;
    let lc = f.leading().expect("nonzero").to_integer();
    let c0 = f.coeff(0).to_integer();
    let a_max = lc.abs().to_i64().expect("small") .max(1);
    let b_max = c0.abs().to_i64().expect("small").max(1);
    for a in 1..=a_max {
        if !(&lc % a).is_zero() {
            continue;
        }
        for b in -b_max..=b_max {
            if !c0.is_zero() && (b == 0 || !(&c0 % b).is_zero()) {
                continue;
            }
            let cand = Polynomial::from_i64(&[b, a]);
            if f.divisible_by(&cand) {
                return true;
            }
        }
    }
    false
}

/// Exhaustive: every integer polynomial of degree ≤ 3 with coefficients
/// in [−4, 4] re-expands exactly, and the irreducibility verdict matches
/// the brute-force linear-divisor oracle.
fn factor_exhaustive(cfg: &SuiteConfig) -> Result<SuiteResult> {
    let mut failures = Vec::new();
    let mut samples = 0usize;
    for c3 in -4i64..=4 {
        for c2 in -4i64..=4 {
            for c1 in -4i64..=4 {
                for c0 in -4i64..=4 {
                    let f = Polynomial::from_i64(&[c0, c1, c2, c3]);
                    let Some(deg) = f.degree() else { continue };
                    samples += 1;
                    let factored =
                        kronecker_factor(&f, cfg.degree_bound, cfg.factor_bound)?;
                    if factored.expand() != f {
                        failures.push(format!("{f} does not re-expand"));
                        continue;
                    }
                    // Pairwise coprimality of the listed factors.
                    for (i, (p, _)) in factored.factors.iter().enumerate() {
                        for (q, _) in factored.factors.iter().skip(i + 1) {
                            if !p.gcd(q).is_one() {
                                failures.push(format!("factors of {f} share a divisor"));
                            }
                        }
                    }
                    if deg >= 2 {
                        // Any proper factor of a degree-2 or -3 polynomial
                        // has degree 1, so the linear oracle is complete.
                        let reducible_oracle = linear_divisor_oracle(&f);
                        if factored.is_irreducible() == reducible_oracle {
                            failures.push(format!(
                                "verdict mismatch on {f}: kronecker says {}, oracle says {}",
                                factored.is_irreducible(),
                                !reducible_oracle
                            ));
                        }
                    }
                }
            }
        }
    }
    result("factor-exhaustive", samples, failures)
}
