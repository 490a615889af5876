use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Generalized binomial coefficient h(h-1)...(h-m+1)/m! for any integer h
/// and m ≥ 0, exact.
pub fn gen_binomial(h: i64, m: u64) -> BigInt {
    if m == 0 {
        return BigInt::one();
    }
    // For 0 ≤ h < m the falling factorial hits zero.
    if h >= 0 && (h as u64) < m {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..m as i64 {
        num *= BigInt::from(h - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}
