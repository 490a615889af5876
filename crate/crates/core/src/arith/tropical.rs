use crate::arith::exponent::ExponentVector;
use crate::error::Result;

/// A Laurent monomial y^v viewed as an element of the tropical semifield
/// Trop(y), where addition is componentwise min of exponents and
/// multiplication is ordinary monomial multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalElement {
    pub exponents: ExponentVector,
}

impl TropicalElement {
    pub fn new(exponents: ExponentVector) -> Self {
        TropicalElement { exponents }
    }

    pub fn one(n: usize) -> Self {
        TropicalElement { exponents: ExponentVector::zeros(n) }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        TropicalElement { exponents: &self.exponents + &rhs.exponents }
    }
}

/// Tropical addition: y^a ⊕ y^b = y^min(a,b) componentwise.
pub fn trop_add(a: &TropicalElement, b: &TropicalElement) -> Result<TropicalElement> {
    Ok(TropicalElement { exponents: a.exponents.entrywise_min(&b.exponents)? })
}
