//! Evaluation in a prime field, used as a fast probabilistic pre-check of
//! rational-function identities before committing to exact
//! cross-multiplication (Schwartz–Zippel style).

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith::poly::SparsePolynomial;
use crate::arith::rational::RationalFunction;
use crate::error::{Error, Result};

/// A 62-bit prime, large enough that random-point collisions are negligible
/// for the polynomial sizes exercised here.
pub const DEFAULT_PRIME: u64 = 4_611_686_018_427_387_847;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> Result<u64> {
    if a % p == 0 {
        return Err(Error::DenominatorVanishes);
    }
    Ok(pow_mod(a, p - 2, p))
}

fn coef_mod(c: &BigInt, p: u64) -> u64 {
    let r = c % BigInt::from(p);
    let r = if r < BigInt::from(0) { r + BigInt::from(p) } else { r };
    r.to_u64().unwrap()
}

/// Evaluates a Laurent polynomial at `point` mod `p`. Negative exponents use
/// modular inverses, so every coordinate of `point` must be nonzero mod p
/// when such exponents occur.
pub fn eval_poly_mod_p(f: &SparsePolynomial, point: &[u64], p: u64) -> Result<u64> {
    let mut acc = 0u64;
    for (e, c) in f.terms() {
        let mut term = coef_mod(c, p);
        for (&x, &k) in point.iter().zip(&e.0) {
            let factor = if k >= 0 {
                pow_mod(x, k as u64, p)
            } else {
                if x % p == 0 {
                    return Err(Error::DenominatorVanishes);
                }
                pow_mod(inv_mod(x, p)?, k.unsigned_abs(), p)
            };
            term = mul_mod(term, factor, p);
        }
        acc = (acc + term) % p;
    }
    Ok(acc)
}

/// Evaluates num/den at `point` mod `p`; errors when the denominator
/// vanishes there (caller retries with a fresh point).
pub fn eval_frac_mod_p(f: &RationalFunction, point: &[u64], p: u64) -> Result<u64> {
    let den = eval_poly_mod_p(f.den(), point, p)?;
    if den == 0 {
        return Err(Error::DenominatorVanishes);
    }
    let num = eval_poly_mod_p(f.num(), point, p)?;
    Ok(mul_mod(num, inv_mod(den, p)?, p))
}

/// Probabilistic equality of two rational functions: agreement at `samples`
/// random points of the prime field. Vanishing denominators are skipped and
/// resampled.
pub fn probably_equal(
    a: &RationalFunction,
    b: &RationalFunction,
    samples: usize,
    rng: &mut impl FnMut() -> u64,
) -> bool {
    let p = DEFAULT_PRIME;
    let mut done = 0;
    let mut attempts = 0;
    while done < samples && attempts < samples * 20 {
        attempts += 1;
        let point: Vec<u64> = (0..a.nvars()).map(|_| 1 + rng() % (p - 1)).collect();
        match (eval_frac_mod_p(a, &point, p), eval_frac_mod_p(b, &point, p)) {
            (Ok(x), Ok(y)) => {
                if x != y {
                    return false;
                }
                done += 1;
            }
            _ => continue,
        }
    }
    done == samples
}
