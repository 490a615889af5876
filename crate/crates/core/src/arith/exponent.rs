use std::cmp::Ordering;
use std::ops::{Add, Index, Neg, Sub};

use crate::error::{Error, Result};

/// Integer exponent vector of a (Laurent) monomial. Entries may be negative.
///
/// The `Ord` implementation is graded lexicographic: compare total degree
/// first, then entries left to right. This is the canonical term order of
/// every polynomial in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(pub Vec<i64>);

impl ExponentVector {
    pub fn new(entries: Vec<i64>) -> Self {
        ExponentVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// Standard basis vector e_i (0-based).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    /// Entrywise [.]_+ = max(., 0).
    pub fn positive_part(&self) -> Self {
        ExponentVector(self.0.iter().map(|&e| e.max(0)).collect())
    }

    pub fn scaled(&self, s: i64) -> Self {
        ExponentVector(self.0.iter().map(|&e| e * s).collect())
    }

    /// Entrywise min, i.e. tropical addition of the monomials y^a ⊕ y^b.
    pub fn entrywise_min(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(ExponentVector(
            self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect(),
        ))
    }

    /// a ≤ b entrywise.
    pub fn dominated_by(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a <= b)
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        Ok(())
    }
}

impl Index<usize> for ExponentVector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add<&ExponentVector> for &ExponentVector {
    type Output = ExponentVector;
    fn add(self, rhs: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.len(), rhs.len());
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(&a, &b)| a + b).collect())
    }
}

impl Sub<&ExponentVector> for &ExponentVector {
    type Output = ExponentVector;
    fn sub(self, rhs: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.len(), rhs.len());
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(&a, &b)| a - b).collect())
    }
}

impl Neg for &ExponentVector {
    type Output = ExponentVector;
    fn neg(self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|&a| -a).collect())
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let a = ExponentVector::new(vec![1, 1]);
        let b = ExponentVector::new(vec![2, 0]);
        let c = ExponentVector::new(vec![0, 0]);
        assert!(a < b); // same degree, lex on first entry
        assert!(c < a);
        assert!(ExponentVector::new(vec![-1, 0]) < c);
    }

    #[test]
    fn min_and_parts() {
        let a = ExponentVector::new(vec![2, -1]);
        let b = ExponentVector::new(vec![1, 1]);
        assert_eq!(a.entrywise_min(&b).unwrap(), ExponentVector::new(vec![1, -1]));
        assert_eq!(a.positive_part(), ExponentVector::new(vec![2, 0]));
        assert!(a.entrywise_min(&ExponentVector::zeros(3)).is_err());
    }
}
