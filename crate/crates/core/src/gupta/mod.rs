//! The product-formula engines: mutation traces with their exponent tables,
//! the recursive rational factors, the product and summation forms of the
//! F-polynomial formula, the dot-product reformulation, and the four-engine
//! cross-check.

pub mod crosscheck;
pub mod lfactor;
pub mod sum;
pub mod tildec;
pub mod trace;

pub use crosscheck::{cross_check_engines, CrossCheckReport, EngineResult};
pub use lfactor::{f_product, l_factors, LFactorChain};
pub use sum::{f_sum, TruncatedSum};
pub use tildec::tilde_c;
pub use trace::{build_trace, MutationTrace, TraceStep};
