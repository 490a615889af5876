use num_rational::Ratio;

use crate::arith::exponent::ExponentVector;
use crate::arith::poly::SparsePolynomial;
use crate::cluster::matrix::{mutate_matrix, ExchangeMatrix, Matrix};
use crate::cluster::symmetrizer::{skew_symmetrizer, SkewSymmetrizer};
use crate::error::{Error, Result};

/// Common sign of a sign-coherent c-vector: +1 if all entries ≥ 0, -1 if
/// all ≤ 0. Mixed signs indicate a bug upstream, since sign-coherence is a
/// theorem for c-vectors of a cluster pattern.
pub fn tropical_sign(c: &[i64]) -> Result<i64> {
    if c.iter().all(|&v| v == 0) {
        return Err(Error::ZeroVector);
    }
    if c.iter().all(|&v| v >= 0) {
        Ok(1)
    } else if c.iter().all(|&v| v <= 0) {
        Ok(-1)
    } else {
        Err(Error::SignCoherenceViolation(c.to_vec()))
    }
}

/// The D-inner product (u, v)_D = Σ_i u_i·v_i/d_i, times `scale`.
/// Exact rational; callers that need integrality assert it themselves.
pub fn inner_product_d(u: &[i64], v: &[i64], d: &SkewSymmetrizer, scale: i64) -> Ratio<i64> {
    debug_assert_eq!(u.len(), v.len());
    let sum: Ratio<i64> = u
        .iter()
        .zip(v)
        .zip(&d.d)
        .map(|((&ui, &vi), &di)| Ratio::new(ui * vi, di))
        .sum();
    sum * scale
}

/// Per-step c-vector data recorded along a mutation sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CVectorData {
    /// c-vector at the seed AFTER the mutation.
    pub c: Vec<i64>,
    pub epsilon: i64,
    /// ε·c, entrywise nonnegative.
    pub c_plus: Vec<i64>,
    /// B0·c_plus.
    pub c_hat_plus: Vec<i64>,
}

impl CVectorData {
    pub fn new(c: Vec<i64>, b0: &ExchangeMatrix) -> Result<Self> {
        let epsilon = tropical_sign(&c)?;
        let c_plus: Vec<i64> = c.iter().map(|&v| epsilon * v).collect();
        let c_hat_plus = b0.apply(&c_plus);
        Ok(CVectorData { c, epsilon, c_plus, c_hat_plus })
    }
}

/// The full state of a cluster pattern at one tree vertex: exchange matrix,
/// C- and G-matrices, and the n F-polynomials, together with the fixed
/// initial data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedState {
    pub b: ExchangeMatrix,
    pub c: Matrix,
    pub g: Matrix,
    pub f: Vec<SparsePolynomial>,
    pub d: SkewSymmetrizer,
    pub b0: ExchangeMatrix,
}

impl SeedState {
    /// Initial seed with principal coefficients: C = G = I, F_i = 1.
    pub fn initial(b0: ExchangeMatrix) -> Result<Self> {
        let n = b0.n();
        let d = skew_symmetrizer(&b0)?;
        Ok(SeedState {
            b: b0.clone(),
            c: Matrix::identity(n),
            g: Matrix::identity(n),
            f: vec![SparsePolynomial::one(n); n],
            d,
            b0,
        })
    }

    pub fn rank(&self) -> usize {
        self.b.n()
    }

    /// Tropical sign ε_{k;t} of the k-th c-vector (0-based k).
    pub fn epsilon(&self, k: usize) -> Result<i64> {
        tropical_sign(&self.c.column(k))
    }
}

fn pos(v: i64) -> i64 {
    v.max(0)
}

fn monomial(exp: &[i64]) -> SparsePolynomial {
    SparsePolynomial::monomial(ExponentVector::new(exp.to_vec()), 1)
}

/// Mutation of the full seed state in direction k (0-based). The F-update
/// divides exactly by the old F_k; a failed division signals a bug.
pub fn mutate_seed(s: &SeedState, k: usize) -> Result<SeedState> {
    let n = s.rank();
    if k >= n {
        return Err(Error::IndexOutOfRange(k + 1, n));
    }
    let epsilon = s.epsilon(k)?;
    let c_col = s.c.column(k);

    // C-update: bottom block of extended-matrix mutation.
    let mut c_new = Matrix::zero(n);
    for i in 0..n {
        for j in 0..n {
            let v = if j == k {
                -s.c.get(i, j)
            } else {
                s.c.get(i, j) + s.c.get(i, k) * pos(s.b.get(k, j)) + pos(-s.c.get(i, k)) * s.b.get(k, j)
            };
            c_new.set(i, j, v);
        }
    }

    // G-update: g'_k = -g_k + Σ_j [-ε b_{jk}]_+ g_j.
    let mut g_new = s.g.clone();
    for i in 0..n {
        let mut v = -s.g.get(i, k);
        for j in 0..n {
            v += pos(-epsilon * s.b.get(j, k)) * s.g.get(i, j);
        }
        g_new.set(i, k, v);
    }

    // F-update: (y^{[c_k]_+}·Π F_i^{[b_ik]_+} + y^{[-c_k]_+}·Π F_i^{[-b_ik]_+}) / F_k.
    let c_pos: Vec<i64> = c_col.iter().map(|&v| pos(v)).collect();
    let c_neg: Vec<i64> = c_col.iter().map(|&v| pos(-v)).collect();
    let mut term_a = monomial(&c_pos);
    let mut term_b = monomial(&c_neg);
    for i in 0..n {
        let b_ik = s.b.get(i, k);
        if b_ik > 0 {
            term_a = &term_a * &s.f[i].pow(b_ik as u32);
        } else if b_ik < 0 {
            term_b = &term_b * &s.f[i].pow((-b_ik) as u32);
        }
    }
    let f_k_new = (&term_a + &term_b).exact_div(&s.f[k])?;
    let mut f_new = s.f.clone();
    f_new[k] = f_k_new;

    Ok(SeedState {
        b: mutate_matrix(&s.b, k)?,
        c: c_new,
        g: g_new,
        f: f_new,
        d: s.d.clone(),
        b0: s.b0.clone(),
    })
}

/// Applies a sequence of mutations (0-based directions) to the initial seed
/// of B0, returning every visited seed including the initial one.
pub fn mutation_path(b0: &ExchangeMatrix, seq: &[usize]) -> Result<Vec<SeedState>> {
    let mut seeds = vec![SeedState::initial(b0.clone())?];
    for &k in seq {
        let next = mutate_seed(seeds.last().unwrap(), k)?;
        seeds.push(next);
    }
    Ok(seeds)
}
