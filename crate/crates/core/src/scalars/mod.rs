//! Exact coefficient arithmetic.

mod field;
mod gauss;
mod laurent;
mod linalg;
mod monomial;
mod ratfunc;
pub mod sparse;
mod unit;

pub use field::{Field, Fp, Ring, FP_MODULUS};
pub use gauss::{GaussRational, ParseGaussError};
pub use laurent::{LaurentPoly, UniPoly};
pub use linalg::{rank, rf_solve};
pub use monomial::{Monomial, Var};
pub use ratfunc::RatFunc;
pub use unit::SignedMonomial;
