use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::binomial::gen_binomial;
use crate::arith::exponent::ExponentVector;
use crate::arith::poly::SparsePolynomial;
use crate::gupta::trace::MutationTrace;

/// Result of the summation engine. `truncated` records that the enumeration
/// hit the cap boundary with a nonzero binomial continuation; terms beyond
/// the cap may then be missing, but every monomial dominated by the cap
/// carries its exact coefficient regardless.
#[derive(Debug, Clone)]
pub struct TruncatedSum {
    pub poly: SparsePolynomial,
    pub cap: ExponentVector,
    pub truncated: bool,
}

struct Enumerator<'a> {
    trace: &'a MutationTrace,
    cap: Vec<i64>,
    /// h[j] = E[i_l][j] + Σ_{k>j} m_k·A[k][j], updated as tuples are chosen.
    h: Vec<i64>,
    out: SparsePolynomial,
    truncated: bool,
}

impl Enumerator<'_> {
    /// Depth-first over m_l, m_{l-1}, ..., m_1. `budget` is cap minus the
    /// exponents already committed by deeper levels, `coef` the product of
    /// their binomial factors.
    fn descend(&mut self, level: isize, budget: Vec<i64>, coef: BigInt) {
        if level < 0 {
            let exp: Vec<i64> = self.cap.iter().zip(&budget).map(|(&c, &b)| c - b).collect();
            self.out.add_term(ExponentVector::new(exp), &coef);
            return;
        }
        let j = level as usize;
        let c_plus = self.trace.steps[j].data.c_plus.clone();
        let a_row = self.trace.a_table[j].clone();
        let h_j = self.h[j];
        let mut m_j = 0u64;
        let mut remaining = budget;
        loop {
            let factor = gen_binomial(h_j, m_j);
            if factor.is_zero() {
                // h_j ≥ 0 and m_j > h_j: every larger m_j vanishes too.
                break;
            }
            // A[j][jp] for jp < j: choosing m_j shifts the shallower h's
            for (jp, a) in a_row.iter().enumerate() {
                self.h[jp] += m_j as i64 * a;
            }
            self.descend(level - 1, remaining.clone(), &coef * &factor);
            for (jp, a) in a_row.iter().enumerate() {
                self.h[jp] -= m_j as i64 * a;
            }
            // advance m_j by one copy of c_j^+ if the budget allows
            if remaining.iter().zip(&c_plus).any(|(&r, &c)| r < c) {
                if !gen_binomial(h_j, m_j + 1).is_zero() {
                    self.truncated = true;
                }
                break;
            }
            for (r, &c) in remaining.iter_mut().zip(&c_plus) {
                *r -= c;
            }
            m_j += 1;
        }
    }
}

/// Summation engine: enumerates tuples (m_1..m_l) with Σ m_j·c_j^+ ≤ cap and
/// accumulates Π_j binom(E[i_l][j] + Σ_{k>j} m_k·A[k][j], m_j)·y^{Σ m_j c_j^+}.
/// Exact below the cap; equal to the full F-polynomial whenever the cap
/// dominates its degree vector.
pub fn f_sum(trace: &MutationTrace, cap: &ExponentVector) -> TruncatedSum {
    let n = trace.rank();
    let l = trace.len();
    if l == 0 {
        return TruncatedSum {
            poly: SparsePolynomial::one(n),
            cap: cap.clone(),
            truncated: false,
        };
    }
    let fin = trace.final_direction().unwrap();
    let mut en = Enumerator {
        trace,
        cap: cap.0.clone(),
        h: trace.e_table[fin].clone(),
        out: SparsePolynomial::zero(n),
        truncated: false,
    };
    en.descend(l as isize - 1, cap.0.clone(), BigInt::one());
    TruncatedSum { poly: en.out, cap: cap.clone(), truncated: en.truncated }
}

/// Contribution of the tuple family with m_{j} fixed for j ≥ 2 and m_1 free
/// within the cap. Used to reproduce the tuple-family table of the worked
/// example in tests.
pub fn family_contribution(
    trace: &MutationTrace,
    fixed_tail: &[u64],
    cap: &ExponentVector,
) -> SparsePolynomial {
    let n = trace.rank();
    let l = trace.len();
    assert_eq!(fixed_tail.len(), l - 1, "tail fixes m_2..m_l");
    let fin = trace.final_direction().unwrap();
    let mut h = trace.e_table[fin].clone();
    let mut base_exp = vec![0i64; n];
    let mut tail_coef = BigInt::one();
    for (idx, &m_k) in fixed_tail.iter().enumerate() {
        let k = idx + 1; // 0-based step of m_{k+1}
        tail_coef *= gen_binomial(h[k], m_k);
        for (jp, a) in trace.a_table[k].iter().enumerate() {
            h[jp] += m_k as i64 * a;
        }
        for (b, &c) in base_exp.iter_mut().zip(&trace.steps[k].data.c_plus) {
            *b += m_k as i64 * c;
        }
    }
    let mut out = SparsePolynomial::zero(n);
    if tail_coef.is_zero() {
        return out;
    }
    let c1 = &trace.steps[0].data.c_plus;
    let mut m1 = 0u64;
    loop {
        let exp: Vec<i64> = base_exp
            .iter()
            .zip(c1)
            .map(|(&b, &c)| b + m1 as i64 * c)
            .collect();
        if exp.iter().zip(&cap.0).any(|(&e, &c)| e > c) {
            break;
        }
        let coef = &tail_coef * &gen_binomial(h[0], m1);
        out.add_term(ExponentVector::new(exp), &coef);
        if h[0] >= 0 && m1 as i64 >= h[0] {
            break;
        }
        m1 += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::matrix::Matrix;
    use crate::gupta::lfactor::f_product;
    use crate::gupta::trace::build_trace;

    fn golden_trace() -> MutationTrace {
        build_trace(&Matrix::from_rows(vec![vec![0, 1], vec![-4, 0]]), &[0, 1, 0]).unwrap()
    }

    #[test]
    fn reproduces_golden_f_polynomial_at_cap() {
        let trace = golden_trace();
        let sum = f_sum(&trace, &ExponentVector::new(vec![3, 4]));
        assert_eq!(sum.poly, f_product(&trace, 0).unwrap());
    }

    #[test]
    fn empty_trace() {
        let trace = build_trace(&Matrix::from_rows(vec![vec![0, 1], vec![-4, 0]]), &[]).unwrap();
        let sum = f_sum(&trace, &ExponentVector::new(vec![7, 7]));
        assert!(sum.poly.is_one());
        assert!(!sum.truncated);
    }

    #[test]
    fn undersized_cap_truncates_but_agrees_below() {
        let trace = golden_trace();
        let full = f_product(&trace, 0).unwrap();
        let cap = ExponentVector::new(vec![2, 2]);
        let sum = f_sum(&trace, &cap);
        assert!(sum.truncated);
        for (e, c) in sum.poly.terms() {
            assert_eq!(c, &full.coefficient(e), "coefficient of {e:?}");
        }
        for (e, c) in full.terms() {
            if e.dominated_by(&cap) {
                assert_eq!(&sum.poly.coefficient(e), c);
            }
        }
    }
}
