use std::fmt;

use crate::error::{Error, Result};

/// Square integer matrix. Used for exchange matrices B_t as well as the
/// C- and G-matrices of a seed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    rows: Vec<Vec<i64>>,
}

/// An exchange matrix is a square matrix whose skew-symmetrizability is
/// certified separately by `skew_symmetrizer`.
pub type ExchangeMatrix = Matrix;

impl Matrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix { n, rows }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        Matrix { n, rows }
    }

    pub fn zero(n: usize) -> Self {
        Matrix { n, rows: vec![vec![0; n]; n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.rows[i][j] = v;
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.n).map(|i| self.rows[i][j]).collect()
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.rows[j][i]).collect())
            .collect();
        Matrix { n: self.n, rows }
    }

    pub fn negated(&self) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&v| -v).collect())
            .collect();
        Matrix { n: self.n, rows }
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        let mut out = Matrix::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.rows[i][j] = (0..self.n).map(|k| self.rows[i][k] * rhs.rows[k][j]).sum();
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.rows[i][j] * v[j]).sum())
            .collect()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "{row:?}")?;
        }
        Ok(())
    }
}

fn pos(v: i64) -> i64 {
    v.max(0)
}

/// Matrix mutation in direction k (0-based):
/// b'_{ij} = -b_{ij} if i=k or j=k, else b_{ij} + b_{ik}[b_{kj}]_+ + [-b_{ik}]_+ b_{kj}.
pub fn mutate_matrix(b: &ExchangeMatrix, k: usize) -> Result<ExchangeMatrix> {
    let n = b.n();
    if k >= n {
        return Err(Error::IndexOutOfRange(k + 1, n));
    }
    let mut out = Matrix::zero(n);
    for i in 0..n {
        for j in 0..n {
            let v = if i == k || j == k {
                -b.get(i, j)
            } else {
                b.get(i, j) + b.get(i, k) * pos(b.get(k, j)) + pos(-b.get(i, k)) * b.get(k, j)
            };
            out.set(i, j, v);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank2_sign_flip() {
        let b = Matrix::from_rows(vec![vec![0, 1], vec![-4, 0]]);
        let m = mutate_matrix(&b, 0).unwrap();
        assert_eq!(m, Matrix::from_rows(vec![vec![0, -1], vec![4, 0]]));
    }

    #[test]
    fn a3_step() {
        let b = Matrix::from_rows(vec![vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 0]]);
        let m = mutate_matrix(&b, 1).unwrap();
        assert_eq!(
            m,
            Matrix::from_rows(vec![vec![0, -1, 1], vec![1, 0, -1], vec![-1, 1, 0]])
        );
    }

    #[test]
    fn involution() {
        let b = Matrix::from_rows(vec![vec![0, 2, -1], vec![-1, 0, 3], vec![1, -2, 0]]);
        let back = mutate_matrix(&mutate_matrix(&b, 2).unwrap(), 2).unwrap();
        assert_eq!(back, b);
    }

    #[test]
    fn out_of_range() {
        let b = Matrix::from_rows(vec![vec![0]]);
        assert!(mutate_matrix(&b, 1).is_err());
    }
}
