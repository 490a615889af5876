use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::exponent::ExponentVector;
use crate::error::{Error, Result};

/// Sparse multivariate Laurent polynomial with arbitrary-precision integer
/// coefficients, keyed by exponent vector in graded-lex order.
///
/// Invariants: no zero coefficients are stored, and every key has length
/// `nvars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    nvars: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl SparsePolynomial {
    pub fn zero(nvars: usize) -> Self {
        SparsePolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(nvars);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(ExponentVector::zeros(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn monomial(exp: ExponentVector, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(exp.len());
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    /// The variable with the given 0-based index.
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(ExponentVector::unit(nvars, i), 1)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.num_terms() == 1
            && self
                .terms
                .iter()
                .next()
                .map_or(false, |(e, c)| e.is_zero() && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded-lex ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &ExponentVector) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&ExponentVector::zeros(self.nvars))
    }

    /// Graded-lex maximal term.
    pub fn leading_term(&self) -> Option<(&ExponentVector, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Graded-lex minimal term.
    pub fn trailing_term(&self) -> Option<(&ExponentVector, &BigInt)> {
        self.terms.iter().next()
    }

    /// True if every exponent is nonnegative (an ordinary polynomial).
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.is_nonnegative())
    }

    /// Componentwise maximum of all exponent vectors; zero vector for 0 and
    /// constants.
    pub fn degree_vector(&self) -> ExponentVector {
        let mut d = vec![0i64; self.nvars];
        for e in self.terms.keys() {
            for (di, &ei) in d.iter_mut().zip(&e.0) {
                *di = (*di).max(ei);
            }
        }
        ExponentVector::new(d)
    }

    pub fn add_term(&mut self, exp: ExponentVector, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(exp.len(), self.nvars);
        match self.terms.get_mut(&exp) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c.clone());
            }
        }
    }

    pub fn mul_monomial(&self, exp: &ExponentVector, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, k)| (e + exp, k * c))
            .collect();
        SparsePolynomial { nvars: self.nvars, terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            return Self::one(self.nvars);
        }
        match self.num_terms() {
            1 => {
                let (exp, c) = self.leading_term().unwrap();
                return Self::monomial(exp.scaled(e as i64), c.pow(e));
            }
            2 => {
                // binomial expansion beats repeated squaring for two terms
                let mut it = self.terms.iter();
                let (ea, ca) = it.next().unwrap();
                let (eb, cb) = it.next().unwrap();
                let mut out = Self::zero(self.nvars);
                let mut coef = ca.pow(e);
                let mut exp = ea.scaled(e as i64);
                let step = eb - ea;
                for i in 0..=e {
                    out.add_term(exp.clone(), &coef);
                    if i < e {
                        // C(e,i+1)·ca^{e-i-1}·cb^{i+1} from the previous
                        // coefficient; the division is exact
                        coef = (coef * (e - i) * cb) / (BigInt::from(i + 1) * ca);
                        exp = &exp + &step;
                    }
                }
                return out;
            }
            _ => {}
        }
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact division: returns q with q * den = self, or `NotDivisible`.
    ///
    /// Repeated leading-term elimination under graded-lex. For Laurent inputs
    /// the quotient's trailing monomial, when it exists, is
    /// trail(num)/trail(den); any elimination step that would go below that
    /// bound proves non-divisibility and terminates the loop.
    pub fn exact_div(&self, den: &Self) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let (den_lead_e, den_lead_c) = den.leading_term().unwrap();
        let q_trail = {
            let (num_trail_e, _) = self.trailing_term().unwrap();
            let (den_trail_e, _) = den.trailing_term().unwrap();
            num_trail_e - den_trail_e
        };
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((rem_lead_e, rem_lead_c)) = rem.leading_term() {
            let q_exp = rem_lead_e - den_lead_e;
            if q_exp < q_trail {
                return Err(Error::NotDivisible);
            }
            let (q_coef, r) = num_integer::div_rem(rem_lead_c.clone(), den_lead_c.clone());
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            rem = &rem - &den.mul_monomial(&q_exp, &q_coef);
            quot.add_term(q_exp, &q_coef);
        }
        // Dividing ordinary polynomials must yield an ordinary polynomial;
        // a Laurent quotient (e.g. (1+y1)/y2) does not count as divisible.
        if self.is_polynomial() && den.is_polynomial() && !quot.is_polynomial() {
            return Err(Error::NotDivisible);
        }
        Ok(quot)
    }

    /// Substitutes `point[i]` for each variable, working in Z.
    pub fn eval(&self, point: &[BigInt]) -> BigInt {
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(&e.0) {
                debug_assert!(k >= 0, "integer evaluation requires nonnegative exponents");
                term *= x.pow(k as u32);
            }
            acc += term;
        }
        acc
    }
}

impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), &(-c));
        }
        out
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        SparsePolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        debug_assert_eq!(self.nvars, rhs.nvars);
        // hash accumulation avoids the tree rebalancing of per-term inserts
        let mut acc: std::collections::HashMap<ExponentVector, BigInt> =
            std::collections::HashMap::with_capacity(self.terms.len().max(rhs.terms.len()));
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea + eb;
                let c = ca * cb;
                match acc.get_mut(&e) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(e, c);
                    }
                }
            }
        }
        SparsePolynomial {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

/// Canonical text rendering: graded-lex ascending, `c*y1^a*y2^b` with `^1`
/// and a leading coefficient of 1 omitted. Variable names are `y1..yn` by
/// default; `fmt_with_vars` takes custom names.
impl SparsePolynomial {
    pub fn render_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let mut factors: Vec<String> = Vec::new();
            let abs = c.abs();
            if !abs.is_one() || e.is_zero() {
                factors.push(abs.to_string());
            }
            for (i, &k) in e.0.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{}", names[i], k)),
                }
            }
            let body = factors.join("*");
            if parts.is_empty() {
                if c.is_negative() {
                    parts.push(format!("-{body}"));
                } else {
                    parts.push(body);
                }
            } else if c.is_negative() {
                parts.push(format!("- {body}"));
            } else {
                parts.push(format!("+ {body}"));
            }
        }
        parts.join(" ")
    }

    pub fn render(&self) -> String {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("y{i}")).collect();
        self.render_with(&names)
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
