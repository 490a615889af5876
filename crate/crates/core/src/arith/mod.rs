//! Exact arithmetic substrate: exponent vectors, sparse multivariate
//! (Laurent) polynomials over arbitrary-precision integers, lazily-reduced
//! rational functions, tropical semifield elements, generalized binomials,
//! and prime-field evaluation.

pub mod binomial;
pub mod exponent;
pub mod modular;
pub mod poly;
pub mod rational;
pub mod tropical;

pub use binomial::gen_binomial;
pub use exponent::ExponentVector;
pub use modular::{eval_frac_mod_p, eval_poly_mod_p, probably_equal, DEFAULT_PRIME};
pub use poly::SparsePolynomial;
pub use rational::{frac_pow_mul, frac_to_polynomial, RationalFunction};
pub use tropical::{trop_add, TropicalElement};
