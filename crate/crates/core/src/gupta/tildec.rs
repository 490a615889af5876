use crate::cluster::matrix::{mutate_matrix, Matrix};
use crate::error::{Error, Result};
use crate::gupta::trace::MutationTrace;

/// Evolves only the (B, C) pair of the pattern with initial matrix `b0`
/// along `seq`, returning the C-matrix after each step.
fn c_matrix_path(b0: &Matrix, seq: &[usize]) -> Result<Vec<Matrix>> {
    let n = b0.n();
    let mut b = b0.clone();
    let mut c = Matrix::identity(n);
    let mut out = Vec::with_capacity(seq.len());
    for &k in seq {
        let mut c_new = Matrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                let v = if j == k {
                    -c.get(i, j)
                } else {
                    c.get(i, j)
                        + c.get(i, k) * b.get(k, j).max(0)
                        + (-c.get(i, k)).max(0) * b.get(k, j)
                };
                c_new.set(i, j, v);
            }
        }
        c = c_new;
        b = mutate_matrix(&b, k)?;
        out.push(c.clone());
    }
    Ok(out)
}

/// The dot-product reformulation's vectors c̃_j, computed two independent
/// ways and cross-checked:
/// (a) componentwise (d_{i_j}/d_i)·c_{i,j} from the trace's own c-vectors;
/// (b) column i_j of the C-matrix of the companion pattern with initial
///     matrix -B0^T after step j.
/// Also asserts c̃_j·g_{i;t_l} = E[i][j] and c̃_j·ĉ_k^+ = A[k][j].
pub fn tilde_c(trace: &MutationTrace) -> Result<Vec<Vec<i64>>> {
    let seq: Vec<usize> = trace.steps.iter().map(|s| s.direction).collect();
    let companion = c_matrix_path(&trace.b0.transpose().negated(), &seq)?;

    let mut out = Vec::with_capacity(trace.len());
    for (j, step) in trace.steps.iter().enumerate() {
        let d_ij = trace.d.d[step.direction];
        let mut direct = Vec::with_capacity(trace.rank());
        for (i, &ci) in step.data.c.iter().enumerate() {
            let num = d_ij * ci;
            let di = trace.d.d[i];
            if num % di != 0 {
                return Err(Error::IntegralityViolation(format!(
                    "tilde_c entry {}·{}/{}",
                    d_ij, ci, di
                )));
            }
            direct.push(num / di);
        }
        let from_companion = companion[j].column(step.direction);
        if direct != from_companion {
            return Err(Error::CrossCheckMismatch(format!(
                "tilde_c step {}: direct {:?} vs companion {:?}",
                j + 1,
                direct,
                from_companion
            )));
        }
        out.push(direct);
    }

    // dot-product form of the exponent tables
    for (j, tc) in out.iter().enumerate() {
        for i in 0..trace.rank() {
            let dot: i64 = tc.iter().zip(&trace.g_end.column(i)).map(|(&a, &b)| a * b).sum();
            if dot != trace.e_table[i][j] {
                return Err(Error::CrossCheckMismatch(format!(
                    "tilde_c_{}·g_{} = {} but E = {}",
                    j + 1,
                    i + 1,
                    dot,
                    trace.e_table[i][j]
                )));
            }
        }
        for (k, step_k) in trace.steps.iter().enumerate().skip(j + 1) {
            let dot: i64 = tc.iter().zip(&step_k.data.c_hat_plus).map(|(&a, &b)| a * b).sum();
            if dot != trace.a_table[k][j] {
                return Err(Error::CrossCheckMismatch(format!(
                    "tilde_c_{}·chat_{}^+ = {} but A = {}",
                    j + 1,
                    k + 1,
                    dot,
                    trace.a_table[k][j]
                )));
            }
        }
    }

    Ok(out)
}
