//! The monomial-automorphism engine: applies the nontropical part of each
//! mutation to monomials in the initial variables, composes the maps along a
//! sequence, and realizes x^g ↦ x^g·F(ŷ) as a fourth F-polynomial engine.
//!
//! Mixed rational functions live in the 2n-variable alphabet of
//! `cluster::variable`: indices 0..n are x, n..2n are y, and
//! ŷ_i = y_i·Π_j x_j^{b_{ji}} is always expanded immediately.

use num_rational::Ratio;

use crate::arith::exponent::ExponentVector;
use crate::arith::poly::SparsePolynomial;
use crate::arith::rational::RationalFunction;
use crate::cluster::seed::inner_product_d;
use crate::cluster::variable::mixed_exponent;
use crate::error::{Error, Result};
use crate::gupta::trace::{MutationTrace, TraceStep};

/// Rational function over the 2n mixed variables.
pub type MixedRational = RationalFunction;

/// Data of one automorphism in the composite: step index j corresponds to
/// the map attached to the edge from t_{j-1}, whose c-vector is -c_j; the
/// pre-mutation sign is folded in so the monomial exponent below is
/// +(m, d_{i_j}·c_j)_D.
#[derive(Debug, Clone)]
pub struct QStep {
    pub direction: usize,
    /// c_j, the post-mutation c-vector (the stored trace convention).
    pub c: Vec<i64>,
    pub c_plus: Vec<i64>,
    pub c_hat_plus: Vec<i64>,
    pub d_dir: i64,
}

impl QStep {
    pub fn from_trace_step(trace: &MutationTrace, step: &TraceStep) -> Self {
        QStep {
            direction: step.direction,
            c: step.data.c.clone(),
            c_plus: step.data.c_plus.clone(),
            c_hat_plus: step.data.c_hat_plus.clone(),
            d_dir: trace.d.d[step.direction],
        }
    }

    /// 1 + ŷ^{c_j^+} expanded into the mixed alphabet.
    pub fn wall_factor(&self, n: usize) -> SparsePolynomial {
        let mut w = SparsePolynomial::one(2 * n);
        w.add_term(mixed_exponent(&self.c_hat_plus, &self.c_plus), &1.into());
        w
    }
}

fn integral(r: Ratio<i64>, what: &str) -> Result<i64> {
    if !r.is_integer() {
        return Err(Error::IntegralityViolation(format!("{what} = {r}")));
    }
    Ok(r.to_integer())
}

/// Image of the monomial x^m: x^m·(1+ŷ^{c_j^+})^{(m, d_{i_j}·c_j)_D}.
pub fn q_apply_monomial(
    step: &QStep,
    d: &crate::cluster::symmetrizer::SkewSymmetrizer,
    m: &[i64],
) -> Result<MixedRational> {
    let n = m.len();
    let e = integral(
        inner_product_d(m, &step.c, d, step.d_dir),
        "(m, d c)_D",
    )?;
    let base = RationalFunction::from_polynomial(step.wall_factor(n));
    let x_mon = RationalFunction::from_polynomial(SparsePolynomial::monomial(
        mixed_exponent(m, &vec![0; n]),
        1,
    ));
    x_mon.pow_mul(&base, e)
}

/// Image of ŷ^n: ŷ^n·(1+ŷ^{c_j^+})^{-(n, d_{i_j}·ĉ_j)_D}, the pre-mutation
/// sign already folded in as for `q_apply_monomial`.
pub fn q_apply_yhat(
    step: &QStep,
    d: &crate::cluster::symmetrizer::SkewSymmetrizer,
    b0: &crate::cluster::matrix::ExchangeMatrix,
    nvec: &[i64],
) -> Result<MixedRational> {
    let n = nvec.len();
    // exponent: -(n, d·ĉ_j)_D with the pre-mutation sign, which by
    // antisymmetry of (·, B·)_D equals (B0·n, d·c_j)_D
    let e = integral(
        inner_product_d(&b0.apply(nvec), &step.c, d, step.d_dir),
        "(B0 n, d c)_D",
    )?;
    let base = RationalFunction::from_polynomial(step.wall_factor(n));
    let yhat = RationalFunction::from_polynomial(SparsePolynomial::monomial(
        mixed_exponent(&b0.apply(nvec), nvec),
        1,
    ));
    yhat.pow_mul(&base, e)
}

/// Applies one automorphism to a mixed polynomial: each term picks up the
/// wall factor to the power determined by its x-content. The image is a
/// fraction over a wall-factor power when negative exponents occur.
fn q_apply_poly(
    step: &QStep,
    d: &crate::cluster::symmetrizer::SkewSymmetrizer,
    p: &SparsePolynomial,
) -> Result<MixedRational> {
    let nn = p.nvars();
    let n = nn / 2;
    if p.is_zero() {
        return Ok(RationalFunction::from_polynomial(p.clone()));
    }
    let mut exps = Vec::with_capacity(p.num_terms());
    let mut emin = i64::MAX;
    for (exp, _) in p.terms() {
        let m = &exp.0[..n];
        let e = integral(inner_product_d(m, &step.c, d, step.d_dir), "(m, d c)_D")?;
        emin = emin.min(e);
        exps.push(e);
    }
    let w = step.wall_factor(n);
    let mut num = SparsePolynomial::zero(nn);
    for ((exp, coef), &e) in p.terms().zip(&exps) {
        for (we, wc) in w.pow((e - emin) as u32).terms() {
            num.add_term(we + exp, &(wc * coef));
        }
    }
    if emin >= 0 {
        Ok(RationalFunction::from_polynomial(
            &num * &w.pow(emin as u32),
        ))
    } else {
        RationalFunction::new(num, w.pow((-emin) as u32))
    }
}

/// Applies one automorphism to a mixed rational function (numerator and
/// denominator separately; the map is a field automorphism).
pub fn q_apply(
    step: &QStep,
    d: &crate::cluster::symmetrizer::SkewSymmetrizer,
    f: &MixedRational,
) -> Result<MixedRational> {
    let num = q_apply_poly(step, d, f.num())?;
    let den = q_apply_poly(step, d, f.den())?;
    Ok(&num * &den.pow(-1)?)
}

/// The composite automorphism applied to x^m: steps are applied innermost
/// first, i.e. the LAST step of the trace acts on the argument first.
pub fn q_composite_monomial(
    trace: &MutationTrace,
    upto: usize,
    m: &[i64],
) -> Result<MixedRational> {
    let n = trace.rank();
    let mut f = RationalFunction::from_polynomial(SparsePolynomial::monomial(
        mixed_exponent(m, &vec![0; n]),
        1,
    ));
    for step in trace.steps.iter().take(upto).rev() {
        let q = QStep::from_trace_step(trace, step);
        f = q_apply(&q, &trace.d, &f)?.reduce_if_divisible();
    }
    Ok(f)
}

/// Composite applied to an arbitrary mixed rational function, over the
/// first `upto` steps of the trace.
pub fn q_composite(
    trace: &MutationTrace,
    upto: usize,
    f: &MixedRational,
) -> Result<MixedRational> {
    let mut f = f.clone();
    for step in trace.steps.iter().take(upto).rev() {
        let q = QStep::from_trace_step(trace, step);
        f = q_apply(&q, &trace.d, &f)?.reduce_if_divisible();
    }
    Ok(f)
}

/// Fourth F-polynomial engine: the composite image of x^{g_{i;t_l}} divided
/// by x^{g_{i;t_l}} equals F_{i;t_l}(ŷ); collecting each term's x-content
/// against B0·(y-exponent) recovers the pure-y polynomial.
pub fn q_composite_f(trace: &MutationTrace, i: usize) -> Result<SparsePolynomial> {
    let n = trace.rank();
    let g = trace.g_end.column(i);
    let image = q_composite_monomial(trace, trace.len(), &g)?;
    let neg_g: Vec<i64> = g.iter().map(|&v| -v).collect();
    let shifted = RationalFunction::new(
        image
            .num()
            .mul_monomial(&mixed_exponent(&neg_g, &vec![0; n]), &1.into()),
        image.den().clone(),
    )?;
    let mixed = shifted.to_polynomial()?;
    // back-substitute ŷ: each term must have x-exponent B0·(y-exponent)
    let mut out = SparsePolynomial::zero(n);
    for (exp, coef) in mixed.terms() {
        let ye = exp.0[n..].to_vec();
        let expected_xe = trace.b0.apply(&ye);
        if exp.0[..n] != expected_xe[..] {
            return Err(Error::ResidualX(format!("{exp:?}")));
        }
        out.add_term(ExponentVector::new(ye), coef);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::matrix::Matrix;
    use crate::gupta::lfactor::{f_product, l_factors};
    use crate::gupta::trace::build_trace;

    fn golden_trace() -> MutationTrace {
        build_trace(&Matrix::from_rows(vec![vec![0, 1], vec![-4, 0]]), &[0, 1, 0]).unwrap()
    }

    /// y-variable polynomial lifted into the mixed alphabet via y^a ↦ ŷ^a.
    fn to_mixed(b0: &Matrix, p: &SparsePolynomial) -> SparsePolynomial {
        let n = p.nvars();
        let mut out = SparsePolynomial::zero(2 * n);
        for (e, c) in p.terms() {
            out.add_term(mixed_exponent(&b0.apply(&e.0), &e.0), c);
        }
        out
    }

    fn to_mixed_frac(b0: &Matrix, f: &RationalFunction) -> RationalFunction {
        RationalFunction::new(to_mixed(b0, f.num()), to_mixed(b0, f.den())).unwrap()
    }

    #[test]
    fn zero_pairing_leaves_monomial_fixed() {
        let trace = golden_trace();
        let q = QStep::from_trace_step(&trace, &trace.steps[0]);
        // (m, d_1 c_1)_D = 0 for m = (0, 1)·? c_1 = (-1, 0), d=(1,4): need m_1 = 0
        let img = q_apply_monomial(&q, &trace.d, &[0, 4]).unwrap();
        assert!(img.den().is_one());
        assert_eq!(img.num().num_terms(), 1);
    }

    #[test]
    fn golden_step1_on_g3() {
        let trace = golden_trace();
        let q = QStep::from_trace_step(&trace, &trace.steps[0]);
        let img = q_apply_monomial(&q, &trace.d, &[-3, 8]).unwrap();
        // x^{g3}·(1+ŷ1)^3
        let wall = q.wall_factor(2);
        let expected = wall
            .pow(3)
            .mul_monomial(&mixed_exponent(&[-3, 8], &[0, 0]), &1.into());
        assert!(img.equals(&RationalFunction::from_polynomial(expected)));
    }

    #[test]
    fn yhat_image_matches_monomial_route() {
        let trace = golden_trace();
        let q = QStep::from_trace_step(&trace, &trace.steps[1]);
        for nvec in [[1i64, 0], [0, 1], [2, -1], [-1, 3]] {
            let via_yhat = q_apply_yhat(&q, &trace.d, &trace.b0, &nvec).unwrap();
            // expand ŷ^n = y^n·x^{B0 n} and push the x-part through the
            // monomial map
            let xpart = trace.b0.apply(&nvec);
            let via_mono = q_apply_monomial(&q, &trace.d, &xpart).unwrap();
            let ymon = SparsePolynomial::monomial(mixed_exponent(&[0, 0], &nvec), 1);
            let via_mono = &via_mono * &RationalFunction::from_polynomial(ymon);
            assert!(via_yhat.equals(&via_mono), "n = {nvec:?}");
        }
    }

    #[test]
    fn composite_acts_on_walls_as_l_powers() {
        // composite over steps 1..m applied to z_k = z_k·Π_{j≤m} L_j^{A[k][j]}
        let trace = golden_trace();
        let chain = l_factors(&trace).unwrap();
        for k in 0..trace.len() {
            for m in 0..k {
                let z_k = RationalFunction::from_polynomial(SparsePolynomial::monomial(
                    mixed_exponent(
                        &trace.steps[k].data.c_hat_plus,
                        &trace.steps[k].data.c_plus,
                    ),
                    1,
                ));
                let lhs = q_composite(&trace, m, &z_k).unwrap();
                let mut rhs = z_k.clone();
                for j in 0..m {
                    rhs = rhs
                        .pow_mul(&to_mixed_frac(&trace.b0, &chain.l[j]), trace.a_table[k][j])
                        .unwrap();
                }
                assert!(lhs.equals(&rhs), "k={k} m={m}");
            }
        }
    }

    #[test]
    fn successive_quotients_are_l_powers() {
        let trace = golden_trace();
        let chain = l_factors(&trace).unwrap();
        let fin = trace.final_direction().unwrap();
        let g = trace.g_end.column(fin);
        for j in 1..=trace.len() {
            let through_j = q_composite_monomial(&trace, j, &g).unwrap();
            let through_prev = q_composite_monomial(&trace, j - 1, &g).unwrap();
            let ratio = &through_j * &through_prev.pow(-1).unwrap();
            let expected = to_mixed_frac(&trace.b0, &chain.l[j - 1])
                .pow(trace.e_table[fin][j - 1])
                .unwrap();
            assert!(ratio.equals(&expected), "j={j}");
        }
    }

    #[test]
    fn composite_engine_matches_product_engine() {
        let trace = golden_trace();
        for i in 0..2 {
            assert_eq!(
                q_composite_f(&trace, i).unwrap(),
                f_product(&trace, i).unwrap(),
                "i={i}"
            );
        }
    }

    #[test]
    fn empty_trace_is_identity() {
        let trace = build_trace(&Matrix::from_rows(vec![vec![0, 1], vec![-4, 0]]), &[]).unwrap();
        for i in 0..2 {
            assert!(q_composite_f(&trace, i).unwrap().is_one());
        }
    }

    #[test]
    fn forward_backward_step_is_identity_on_monomials() {
        // mutating k then k again yields mutually-inverse maps
        let b = Matrix::from_rows(vec![vec![0, 2], vec![-1, 0]]);
        let trace = build_trace(&b, &[0, 0]).unwrap();
        for m in [[1i64, 0], [0, 1], [-2, 3]] {
            let img = q_composite_monomial(&trace, 2, &m).unwrap();
            let expected = RationalFunction::from_polynomial(SparsePolynomial::monomial(
                mixed_exponent(&m, &[0, 0]),
                1,
            ));
            assert!(img.equals(&expected), "m={m:?}");
        }
    }

    #[test]
    fn homomorphism_on_products() {
        let trace = golden_trace();
        let q = QStep::from_trace_step(&trace, &trace.steps[2]);
        let pairs = [([1i64, 2], [0i64, -1]), ([-3, 8], [2, 0])];
        for (a, b) in pairs {
            let ab: Vec<i64> = a.iter().zip(&b).map(|(&x, &y)| x + y).collect();
            let img_ab = q_apply_monomial(&q, &trace.d, &ab).unwrap();
            let img_a = q_apply_monomial(&q, &trace.d, &a).unwrap();
            let img_b = q_apply_monomial(&q, &trace.d, &b).unwrap();
            assert!(img_ab.equals(&(&img_a * &img_b)));
        }
    }
}
