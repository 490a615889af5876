use std::time::{Duration, Instant};

use crate::arith::poly::SparsePolynomial;
use crate::cluster::matrix::ExchangeMatrix;
use crate::error::Result;
use crate::fg::q_composite_f;
use crate::gupta::lfactor::f_product;
use crate::gupta::sum::f_sum;
use crate::gupta::trace::{build_trace, MutationTrace};

#[derive(Debug, Clone)]
pub struct EngineResult {
    pub name: &'static str,
    pub poly: SparsePolynomial,
    pub elapsed: Duration,
}

/// Four-engine comparison for the final F-polynomial F_{i_l;t_l}.
#[derive(Debug, Clone)]
pub struct CrossCheckReport {
    pub engines: Vec<EngineResult>,
    pub agree: bool,
}

impl CrossCheckReport {
    pub fn polynomial(&self) -> &SparsePolynomial {
        &self.engines[0].poly
    }
}

/// Computes F_{i_l;t_l} by all four engines (recurrence, product, sum with
/// cap = the recurrence result's degree vector, automorphism composite) and
/// reports exact agreement with per-engine wall time.
pub fn cross_check_engines(b0: &ExchangeMatrix, seq: &[usize]) -> Result<CrossCheckReport> {
    let t0 = Instant::now();
    let trace = build_trace(b0, seq)?;
    let fin = trace.final_direction().unwrap_or(0);
    let recurrence = trace.recurrence_f(fin).clone();
    let t_rec = t0.elapsed();

    cross_check_with_trace(&trace, fin, recurrence, t_rec)
}

pub fn cross_check_with_trace(
    trace: &MutationTrace,
    i: usize,
    recurrence: SparsePolynomial,
    t_rec: Duration,
) -> Result<CrossCheckReport> {
    let t1 = Instant::now();
    let product = f_product(trace, i)?;
    let t_prod = t1.elapsed();

    let t2 = Instant::now();
    let sum = f_sum(trace, &recurrence.degree_vector());
    let t_sum = t2.elapsed();

    let t3 = Instant::now();
    let fg = q_composite_f(trace, i)?;
    let t_fg = t3.elapsed();

    let agree = recurrence == product && product == sum.poly && sum.poly == fg;
    Ok(CrossCheckReport {
        engines: vec![
            EngineResult { name: "recurrence", poly: recurrence, elapsed: t_rec },
            EngineResult { name: "product", poly: product, elapsed: t_prod },
            EngineResult { name: "sum", poly: sum.poly, elapsed: t_sum },
            EngineResult { name: "fock-goncharov", poly: fg, elapsed: t_fg },
        ],
        agree,
    })
}
