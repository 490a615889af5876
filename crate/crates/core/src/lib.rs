//! Exact computation of mutation data for skew-symmetrizable cluster
//! patterns with principal coefficients: c-/g-vectors, structural
//! identities, and F-polynomials by four independent engines that
//! cross-validate each other (the mutation recurrence, a product of
//! recursively-defined rational factors, its binomial-sum expansion, and
//! composed monomial automorphisms).

pub mod arith;
pub mod cluster;
pub mod error;
pub mod fg;
pub mod gupta;

pub use error::{Error, Result};
