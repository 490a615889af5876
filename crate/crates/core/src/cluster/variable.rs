//! Cluster variables via the separation formula, as Laurent polynomials in
//! the initial x-variables with polynomial y-coefficients.
//!
//! Mixed polynomials live in 2n variables: indices 0..n are x_1..x_n,
//! indices n..2n are y_1..y_n.

use crate::arith::exponent::ExponentVector;
use crate::arith::poly::SparsePolynomial;
use crate::cluster::matrix::ExchangeMatrix;
use crate::cluster::seed::SeedState;

/// Mixed exponent vector: x-part `xe` (may be negative), y-part `ye`.
pub fn mixed_exponent(xe: &[i64], ye: &[i64]) -> ExponentVector {
    let mut v = xe.to_vec();
    v.extend_from_slice(ye);
    ExponentVector::new(v)
}

/// The monomial ŷ^a = y^a·x^{B0·a} as a mixed exponent vector.
pub fn yhat_exponent(b0: &ExchangeMatrix, a: &[i64]) -> ExponentVector {
    mixed_exponent(&b0.apply(a), a)
}

/// Separation formula: x_{i;t} = x^{g_{i;t}}·F_{i;t}(ŷ), expanded into the
/// 2n-variable alphabet. The result is a Laurent polynomial whose
/// y-exponents are nonnegative; its x-denominator is the single monomial
/// x^{-min g-content}.
pub fn cluster_variable(s: &SeedState, i: usize) -> SparsePolynomial {
    let n = s.rank();
    let g = s.g.column(i);
    let mut out = SparsePolynomial::zero(2 * n);
    for (a, coef) in s.f[i].terms() {
        let xe: Vec<i64> = s
            .b0
            .apply(&a.0)
            .iter()
            .zip(&g)
            .map(|(&ba, &gi)| ba + gi)
            .collect();
        out.add_term(mixed_exponent(&xe, &a.0), coef);
    }
    out
}
