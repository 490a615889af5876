use std::fmt;
use std::ops::Mul;

use num_traits::Signed;

use crate::arith::poly::SparsePolynomial;
use crate::error::{Error, Result};

/// Lazily-normalized fraction of sparse polynomials. No gcd reduction is
/// performed; exactness is enforced only when converting to a polynomial,
/// which succeeds precisely when the fraction is one.
///
/// Invariants: den ≠ 0 and den's graded-lex leading coefficient is positive.
#[derive(Debug, Clone)]
pub struct RationalFunction {
    num: SparsePolynomial,
    den: SparsePolynomial,
}

impl RationalFunction {
    pub fn new(num: SparsePolynomial, den: SparsePolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (num, den) = if den.leading_term().unwrap().1.is_negative() {
            (-&num, -&den)
        } else {
            (num, den)
        };
        Ok(RationalFunction { num, den })
    }

    pub fn from_polynomial(p: SparsePolynomial) -> Self {
        let n = p.nvars();
        RationalFunction { num: p, den: SparsePolynomial::one(n) }
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_polynomial(SparsePolynomial::one(nvars))
    }

    pub fn num(&self) -> &SparsePolynomial {
        &self.num
    }

    pub fn den(&self) -> &SparsePolynomial {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let num = &(&self.num * &rhs.den) + &(&self.den * &rhs.num);
        let den = &self.den * &rhs.den;
        RationalFunction::new(num, den).expect("product of nonzero denominators")
    }

    /// acc * f^e with integer (possibly negative) exponent.
    pub fn pow_mul(&self, f: &Self, e: i64) -> Result<Self> {
        if e == 0 {
            return Ok(self.clone());
        }
        if f.is_zero() && e < 0 {
            return Err(Error::DivisionByZero);
        }
        let (base_num, base_den) = if e > 0 {
            (&f.num, &f.den)
        } else {
            (&f.den, &f.num)
        };
        let k = e.unsigned_abs() as u32;
        RationalFunction::new(
            &self.num * &base_num.pow(k),
            &self.den * &base_den.pow(k),
        )
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        Self::one(self.nvars()).pow_mul(self, e)
    }

    /// Collapses the fraction into a polynomial by exact division.
    /// `NotDivisible` signals a broken identity upstream.
    pub fn to_polynomial(&self) -> Result<SparsePolynomial> {
        self.num.exact_div(&self.den)
    }

    /// Equality as rational functions, by exact cross-multiplication.
    pub fn equals(&self, rhs: &Self) -> bool {
        &self.num * &rhs.den == &rhs.num * &self.den
    }

    /// Divides out any common content the two sides expose to exact
    /// division: if den | num the fraction becomes polynomial; if num | den
    /// the denominator collapses instead. A no-op when neither divides.
    pub fn reduce_if_divisible(&self) -> Self {
        if let Ok(q) = self.num.exact_div(&self.den) {
            return Self::from_polynomial(q);
        }
        if !self.num.is_zero() {
            if let Ok(q) = self.den.exact_div(&self.num) {
                let n = self.nvars();
                return RationalFunction::new(SparsePolynomial::one(n), q)
                    .expect("quotient of nonzero polynomials");
            }
        }
        self.clone()
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of nonzero denominators")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// acc · f^e, the fraction-chain accumulator of the product formula.
pub fn frac_pow_mul(acc: &RationalFunction, f: &RationalFunction, e: i64) -> Result<RationalFunction> {
    acc.pow_mul(f, e)
}

/// Final collapse of an accumulated fraction into its polynomial value.
pub fn frac_to_polynomial(f: &RationalFunction) -> Result<SparsePolynomial> {
    f.to_polynomial()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::exponent::ExponentVector;
    use num_bigint::BigInt;

    fn poly(n: usize, terms: &[(&[i64], i64)]) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero(n);
        for (e, c) in terms {
            out.add_term(ExponentVector::new(e.to_vec()), &BigInt::from(*c));
        }
        out
    }

    #[test]
    fn pow_mul_positive_and_negative() {
        let one = RationalFunction::one(1);
        let f = RationalFunction::from_polynomial(poly(1, &[(&[0], 1), (&[1], 1)]));
        let cubed = one.pow_mul(&f, 3).unwrap();
        assert_eq!(cubed.num().num_terms(), 4);
        assert!(cubed.den().is_one());
        let inv4 = one.pow_mul(&f, -4).unwrap();
        assert!(inv4.num().is_one());
        assert_eq!(inv4.den().num_terms(), 5);
    }

    #[test]
    fn zero_base_negative_power() {
        let one = RationalFunction::one(1);
        let zero = RationalFunction::from_polynomial(SparsePolynomial::zero(1));
        assert_eq!(one.pow_mul(&zero, -1).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn to_polynomial_and_equality() {
        let num = poly(2, &[(&[2, 0], 1), (&[0, 2], -1)]);
        let den = poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let f = RationalFunction::new(num, den).unwrap();
        assert_eq!(f.to_polynomial().unwrap(), poly(2, &[(&[1, 0], 1), (&[0, 1], -1)]));
        let g = RationalFunction::from_polynomial(poly(2, &[(&[1, 0], 1), (&[0, 1], -1)]));
        assert!(f.equals(&g));
    }

    #[test]
    fn denominator_sign_normalized() {
        let f = RationalFunction::new(
            poly(1, &[(&[0], 1)]),
            poly(1, &[(&[1], -1)]),
        )
        .unwrap();
        assert!(f.den().leading_term().unwrap().1 > &BigInt::from(0));
    }
}
