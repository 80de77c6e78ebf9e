//! Bounded trial-division factorization of integers.
//!
//! Factorizations are certified: a cofactor is reported prime only when
//! trial division has checked every candidate up to its square root. If
//! certification would require candidates beyond the bound, the call fails
//! loudly rather than returning an unverified factorization.

use num_bigint::BigUint;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::Int;

/// Default trial-division bound. Overridable per call and, in the CLI,
/// via `--factor-bound` or `DEMIVAL_FACTOR_BOUND`.
pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

fn next_candidate(p: u64) -> u64 {
    if p == 2 {
        3
    } else {
        p + 2
    }
}

fn factor_u64(mut c: u64, bound: u64, start: u64, out: &mut Vec<(u64, u32)>) -> Result<()> {
    let mut p = start;
    while c > 1 {
        if (p as u128) * (p as u128) > c as u128 {
            // No divisor up to √c: c is certified prime.
            out.push((c, 1));
            return Ok(());
        }
        if p > bound {
            return Err(Error::FactorBoundExceeded { bound, cofactor: c.to_string() });
        }
        if c.is_multiple_of(p) {
            let mut e = 0u32;
            while c.is_multiple_of(p) {
                c /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p = next_candidate(p);
    }
    Ok(())
}

/// Factor a nonzero integer into certified primes: the product of pᵉ
/// equals |n| exactly. Errors when a cofactor cannot be certified within
/// the trial-division bound.
pub fn factor_integer(n: &Int, bound: u64) -> Result<Vec<(u64, u32)>> {
    if n.is_zero() {
        return Err(Error::InvalidArgument("cannot factor zero".into()));
    }
    let mut c: BigUint = n.abs().to_biguint().expect("abs is nonnegative");
    let mut out: Vec<(u64, u32)> = Vec::new();
    let mut p: u64 = 2;
    while !c.is_one() {
        if let Some(small) = c.to_u64() {
            factor_u64(small, bound, p, &mut out)?;
            out.sort();
            return Ok(out);
        }
        // c exceeds u64, so √c > 2³² ≥ any u64 p² that fits; only the
        // bound can stop us here.
        if p > bound {
            return Err(Error::FactorBoundExceeded { bound, cofactor: c.to_string() });
        }
        if (&c % p).is_zero() {
            let mut e = 0u32;
            while (&c % p).is_zero() {
                c /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p = next_candidate(p);
    }
    out.sort();
    Ok(out)
}

/// All positive divisors of the factored integer, in no particular order.
pub fn divisors(factors: &[(u64, u32)]) -> Vec<Int> {
    let mut out = vec![Int::one()];
    for &(p, e) in factors {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        let big_p = Int::from(p);
        for d in &out {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..e {
                acc *= &big_p;
                next.push(acc.clone());
            }
        }
        out = next;
    }
    out
}
