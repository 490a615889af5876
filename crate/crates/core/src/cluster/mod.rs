//! Seeds, mutation dynamics, skew-symmetrizers, c/g-vector bookkeeping,
//! structural identity verification, and the recurrence-based F-polynomial
//! engine with separation-formula cluster variables.

pub mod matrix;
pub mod seed;
pub mod symmetrizer;
pub mod variable;
pub mod verify;

pub use matrix::{mutate_matrix, ExchangeMatrix, Matrix};
pub use seed::{inner_product_d, mutate_seed, mutation_path, tropical_sign, CVectorData, SeedState};
pub use symmetrizer::{skew_symmetrizer, SkewSymmetrizer};
pub use variable::{cluster_variable, mixed_exponent, yhat_exponent};
pub use verify::{verify_seed, CheckResult, VerificationReport};
