use num_rational::Ratio;

use crate::cluster::matrix::{ExchangeMatrix, Matrix};
use crate::cluster::seed::{inner_product_d, mutation_path, CVectorData, SeedState};
use crate::cluster::symmetrizer::SkewSymmetrizer;
use crate::error::{Error, Result};

/// One recorded mutation step: direction i_j, the c-vector data at the seed
/// after the step, and the g-vector g_{i_j;t_j}.
#[derive(Debug, Clone)]
pub struct TraceStep {
    pub direction: usize,
    pub data: CVectorData,
    pub g: Vec<i64>,
}

/// Mutation trace along a sequence: per-step c/g-vector data plus the two
/// integer exponent tables of the product formula.
///
/// `e_table[i][j]` = (g_{i;t_l}, d_{i_j}·c_j)_D for each variable i and step
/// j; `a_table[k][j]` = (ĉ_k^+, d_{i_j}·c_j)_D for j < k (strictly
/// lower-triangular, stored ragged). Both are integral; integrality is
/// asserted during construction.
#[derive(Debug, Clone)]
pub struct MutationTrace {
    pub b0: ExchangeMatrix,
    pub d: SkewSymmetrizer,
    pub steps: Vec<TraceStep>,
    pub g_end: Matrix,
    pub e_table: Vec<Vec<i64>>,
    pub a_table: Vec<Vec<i64>>,
    /// Every visited seed, t_0 through t_l.
    pub seeds: Vec<SeedState>,
}

fn ratio_to_integer(r: Ratio<i64>, what: &str) -> Result<i64> {
    if !r.is_integer() {
        return Err(Error::IntegralityViolation(format!("{what} = {r}")));
    }
    Ok(r.to_integer())
}

/// Runs the seed mutation along `seq` (0-based directions), recording
/// per-step c-vector data and both inner-product tables.
pub fn build_trace(b0: &ExchangeMatrix, seq: &[usize]) -> Result<MutationTrace> {
    let n = b0.n();
    let seeds = mutation_path(b0, seq)?;
    let d = seeds[0].d.clone();

    let mut steps = Vec::with_capacity(seq.len());
    for (j, &k) in seq.iter().enumerate() {
        let s = &seeds[j + 1];
        let data = CVectorData::new(s.c.column(k), b0)?;
        steps.push(TraceStep { direction: k, data, g: s.g.column(k) });
    }

    let g_end = seeds.last().unwrap().g.clone();
    let mut e_table = vec![Vec::with_capacity(steps.len()); n];
    for (i, row) in e_table.iter_mut().enumerate() {
        for step in &steps {
            let v = inner_product_d(&g_end.column(i), &step.data.c, &d, d.d[step.direction]);
            row.push(ratio_to_integer(v, "(g_i, d c_j)_D")?);
        }
    }
    let mut a_table = Vec::with_capacity(steps.len());
    for (k, step_k) in steps.iter().enumerate() {
        let mut row = Vec::with_capacity(k);
        for step_j in steps.iter().take(k) {
            let v = inner_product_d(
                &step_k.data.c_hat_plus,
                &step_j.data.c,
                &d,
                d.d[step_j.direction],
            );
            row.push(ratio_to_integer(v, "(chat_k^+, d c_j)_D")?);
        }
        a_table.push(row);
    }

    Ok(MutationTrace { b0: b0.clone(), d, steps, g_end, e_table, a_table, seeds })
}

impl MutationTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.b0.n()
    }

    /// Direction of the last step; the headline F-polynomial is the one of
    /// this variable.
    pub fn final_direction(&self) -> Option<usize> {
        self.steps.last().map(|s| s.direction)
    }

    /// The recurrence engine's F-polynomial of variable i at the final seed.
    pub fn recurrence_f(&self, i: usize) -> &crate::arith::poly::SparsePolynomial {
        &self.seeds.last().unwrap().f[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b14() -> Matrix {
        Matrix::from_rows(vec![vec![0, 1], vec![-4, 0]])
    }

    #[test]
    fn golden_example_vectors_and_tables() {
        let trace = build_trace(&b14(), &[0, 1, 0]).unwrap();
        assert_eq!(trace.d.d, vec![1, 4]);
        let cs: Vec<_> = trace.steps.iter().map(|s| s.data.c.clone()).collect();
        assert_eq!(cs, vec![vec![-1, 0], vec![-1, -1], vec![-3, -4]]);
        let chats: Vec<_> = trace.steps.iter().map(|s| s.data.c_hat_plus.clone()).collect();
        assert_eq!(chats, vec![vec![0, -4], vec![1, -4], vec![4, -12]]);
        let gs: Vec<_> = trace.steps.iter().map(|s| s.g.clone()).collect();
        assert_eq!(gs, vec![vec![-1, 4], vec![-1, 3], vec![-3, 8]]);
        assert_eq!(trace.e_table[0], vec![3, 4, 1]);
        assert_eq!(trace.a_table[1], vec![-1]);
        assert_eq!(trace.a_table[2], vec![-4, -4]);
    }

    #[test]
    fn empty_sequence() {
        let trace = build_trace(&b14(), &[]).unwrap();
        assert!(trace.is_empty());
        assert!(trace.e_table.iter().all(|r| r.is_empty()));
        assert!(trace.a_table.is_empty());
    }

    #[test]
    fn double_step_returns_to_identity_c() {
        let trace = build_trace(&b14(), &[1, 1]).unwrap();
        assert_eq!(trace.steps[1].data.c, vec![0, 1]);
    }

    #[test]
    fn delta_pairing_of_final_column() {
        // E[i][l-1] = delta_{i, i_l}
        let trace = build_trace(&b14(), &[0, 1, 0]).unwrap();
        let last = trace.len() - 1;
        let fin = trace.final_direction().unwrap();
        for i in 0..trace.rank() {
            assert_eq!(trace.e_table[i][last], i64::from(i == fin));
        }
    }
}
