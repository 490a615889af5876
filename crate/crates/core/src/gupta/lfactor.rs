use crate::arith::exponent::ExponentVector;
use crate::arith::poly::SparsePolynomial;
use crate::arith::rational::{frac_pow_mul, frac_to_polynomial, RationalFunction};
use crate::error::Result;
use crate::gupta::trace::MutationTrace;

/// The recursively-built rational factors of the product formula:
/// L_1 = 1 + z_1, L_k = 1 + z_k·Π_{j<k} L_j^{A[k][j]}, where z_j = y^{c_j^+}.
#[derive(Debug, Clone)]
pub struct LFactorChain {
    pub l: Vec<RationalFunction>,
}

/// z_k = y^{c_k^+} as a polynomial in the y-variables.
fn z_monomial(trace: &MutationTrace, k: usize) -> SparsePolynomial {
    SparsePolynomial::monomial(ExponentVector::new(trace.steps[k].data.c_plus.clone()), 1)
}

/// Builds L_1..L_l. Each inner product Π L_j^{A[k][j]} is accumulated as an
/// unreduced fraction and then collapsed by opportunistic exact division,
/// which reproduces the simplified forms without a multivariate gcd.
pub fn l_factors(trace: &MutationTrace) -> Result<LFactorChain> {
    let n = trace.rank();
    let mut l: Vec<RationalFunction> = Vec::with_capacity(trace.len());
    for k in 0..trace.len() {
        let mut prod = RationalFunction::one(n);
        for (j, lj) in l.iter().enumerate() {
            prod = frac_pow_mul(&prod, lj, trace.a_table[k][j])?;
        }
        let prod = prod.reduce_if_divisible();
        let z = RationalFunction::from_polynomial(z_monomial(trace, k));
        let lk = RationalFunction::one(n).add(&(&z * &prod));
        l.push(lk);
    }
    Ok(LFactorChain { l })
}

/// Product-formula engine: F_{i;t_l} = Π_j L_j^{E[i][j]}, with numerator and
/// denominator accumulated separately and a single exact division at the
/// end. The formula guarantees the division succeeds; `NotDivisible`
/// signals a bug.
pub fn f_product(trace: &MutationTrace, i: usize) -> Result<SparsePolynomial> {
    let chain = l_factors(trace)?;
    f_product_with_chain(trace, &chain, i)
}

pub fn f_product_with_chain(
    trace: &MutationTrace,
    chain: &LFactorChain,
    i: usize,
) -> Result<SparsePolynomial> {
    let mut acc = RationalFunction::one(trace.rank());
    for (j, lj) in chain.l.iter().enumerate() {
        acc = frac_pow_mul(&acc, lj, trace.e_table[i][j])?;
    }
    frac_to_polynomial(&acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::matrix::Matrix;
    use crate::gupta::trace::build_trace;
    use num_bigint::BigInt;

    fn poly(n: usize, terms: &[(&[i64], i64)]) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero(n);
        for (e, c) in terms {
            out.add_term(ExponentVector::new(e.to_vec()), &BigInt::from(*c));
        }
        out
    }

    fn golden_trace() -> MutationTrace {
        build_trace(&Matrix::from_rows(vec![vec![0, 1], vec![-4, 0]]), &[0, 1, 0]).unwrap()
    }

    #[test]
    fn golden_l_factors() {
        let chain = l_factors(&golden_trace()).unwrap();
        let one_y1 = poly(2, &[(&[0, 0], 1), (&[1, 0], 1)]);
        let l1 = RationalFunction::from_polynomial(one_y1.clone());
        assert!(chain.l[0].equals(&l1));
        // L2 = 1 + y1*y2/(1+y1)
        let l2 = RationalFunction::new(
            poly(2, &[(&[0, 0], 1), (&[1, 0], 1), (&[1, 1], 1)]),
            one_y1,
        )
        .unwrap();
        assert!(chain.l[1].equals(&l2));
        // L3 = 1 + y1^3*y2^4/(1+y1+y1*y2)^4
        let base = poly(2, &[(&[0, 0], 1), (&[1, 0], 1), (&[1, 1], 1)]);
        let den = base.pow(4);
        let l3 = RationalFunction::new(&den + &poly(2, &[(&[3, 4], 1)]), den).unwrap();
        assert!(chain.l[2].equals(&l3));
        // the opportunistic reduction lands on the simplified denominator
        assert_eq!(chain.l[2].den(), l3.den());
    }

    #[test]
    fn single_step_l1() {
        let trace = build_trace(&Matrix::from_rows(vec![vec![0, 1], vec![-4, 0]]), &[1]).unwrap();
        let chain = l_factors(&trace).unwrap();
        assert!(chain.l[0]
            .equals(&RationalFunction::from_polynomial(poly(2, &[(&[0, 0], 1), (&[0, 1], 1)]))));
    }

    #[test]
    fn golden_f_polynomial() {
        let f = f_product(&golden_trace(), 0).unwrap();
        let expected = poly(
            2,
            &[
                (&[0, 0], 1),
                (&[1, 0], 3),
                (&[2, 0], 3),
                (&[3, 0], 1),
                (&[1, 1], 4),
                (&[2, 1], 8),
                (&[3, 1], 4),
                (&[2, 2], 6),
                (&[3, 2], 6),
                (&[3, 3], 4),
                (&[3, 4], 1),
            ],
        );
        assert_eq!(f, expected);
    }

    #[test]
    fn empty_trace_gives_one() {
        let trace = build_trace(&Matrix::from_rows(vec![vec![0, 1], vec![-4, 0]]), &[]).unwrap();
        for i in 0..2 {
            assert!(f_product(&trace, i).unwrap().is_one());
        }
    }

    #[test]
    fn agrees_with_recurrence_on_small_case() {
        let b = Matrix::from_rows(vec![vec![0, 1], vec![-1, 0]]);
        let trace = build_trace(&b, &[0, 1]).unwrap();
        assert_eq!(&f_product(&trace, 1).unwrap(), trace.recurrence_f(1));
    }
}
