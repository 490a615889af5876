use num_integer::Integer;
use num_rational::Ratio;

use crate::cluster::matrix::ExchangeMatrix;
use crate::error::{Error, Result};

/// Positive integers d_1..d_n with d_j·b_{ij} = -d_i·b_{ji}, componentwise
/// minimal per connected component of the nonzero pattern of B. The diagonal
/// matrix D = diag(d_i^{-1}) of the weighted inner product is derived from
/// these.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewSymmetrizer {
    pub d: Vec<i64>,
}

impl SkewSymmetrizer {
    /// Verifies d_j·b_{ij} = -d_i·b_{ji} for all pairs.
    pub fn symmetrizes(&self, b: &ExchangeMatrix) -> bool {
        let n = b.n();
        (0..n).all(|i| {
            (0..n).all(|j| self.d[j] * b.get(i, j) == -self.d[i] * b.get(j, i))
        })
    }

    /// Scales d on the connected components containing the given indices.
    /// Every identity checked in this crate is invariant under this
    /// rescaling; tests use it to assert that.
    pub fn scaled_on_component(&self, b: &ExchangeMatrix, root: usize, factor: i64) -> Self {
        let comp = component_of(b, root);
        let d = self
            .d
            .iter()
            .enumerate()
            .map(|(i, &di)| if comp[i] { di * factor } else { di })
            .collect();
        SkewSymmetrizer { d }
    }
}

fn component_of(b: &ExchangeMatrix, root: usize) -> Vec<bool> {
    let n = b.n();
    let mut seen = vec![false; n];
    let mut stack = vec![root];
    seen[root] = true;
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if !seen[j] && (b.get(i, j) != 0 || b.get(j, i) != 0) {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen
}

/// Computes the minimal positive integer skew-symmetrizer of B by
/// propagating the ratio constraints d_j/d_i = -b_{ji}/b_{ij} over the graph
/// with edges {i,j : b_{ij} ≠ 0}, then clearing denominators per component.
pub fn skew_symmetrizer(b: &ExchangeMatrix) -> Result<SkewSymmetrizer> {
    let n = b.n();
    for i in 0..n {
        if b.get(i, i) != 0 {
            return Err(Error::NotSkewSymmetrizable(format!(
                "nonzero diagonal entry b[{}][{}]",
                i + 1,
                i + 1
            )));
        }
        for j in 0..n {
            let (bij, bji) = (b.get(i, j), b.get(j, i));
            if bij * bji > 0 || (bij == 0) != (bji == 0) {
                return Err(Error::NotSkewSymmetrizable(format!(
                    "entries b[{}][{}]={} and b[{}][{}]={} are not oppositely signed",
                    i + 1,
                    j + 1,
                    bij,
                    j + 1,
                    i + 1,
                    bji
                )));
            }
        }
    }

    let mut ratio: Vec<Option<Ratio<i64>>> = vec![None; n];
    let mut d = vec![0i64; n];
    for root in 0..n {
        if ratio[root].is_some() {
            continue;
        }
        let mut comp = vec![root];
        ratio[root] = Some(Ratio::from_integer(1));
        let mut stack = vec![root];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                let bij = b.get(i, j);
                if bij == 0 {
                    continue;
                }
                // d_j·b_{ij} = -d_i·b_{ji}
                let r = ratio[i].unwrap() * Ratio::new(-b.get(j, i), bij);
                match ratio[j] {
                    Some(existing) => {
                        if existing != r {
                            return Err(Error::NotSkewSymmetrizable(format!(
                                "inconsistent ratio constraints on a cycle through {} and {}",
                                i + 1,
                                j + 1
                            )));
                        }
                    }
                    None => {
                        ratio[j] = Some(r);
                        comp.push(j);
                        stack.push(j);
                    }
                }
            }
        }
        // Clear denominators, then divide out the common numerator factor.
        let lcm_den = comp
            .iter()
            .fold(1i64, |acc, &i| acc.lcm(ratio[i].unwrap().denom()));
        let scaled: Vec<i64> = comp
            .iter()
            .map(|&i| (ratio[i].unwrap() * lcm_den).to_integer())
            .collect();
        let gcd = scaled.iter().fold(0i64, |acc, &v| acc.gcd(&v));
        for (&i, &v) in comp.iter().zip(&scaled) {
            d[i] = v / gcd;
        }
    }

    let out = SkewSymmetrizer { d };
    debug_assert!(out.symmetrizes(b));
    Ok(out)
}
