//! Almost-central elements of multi-parameter quantum affine superalgebras
//! of type sl(M|M), with exact verification.

pub mod case;
pub mod discrepancy;
pub mod error;
pub mod lattice;
pub mod liesuper;
pub mod membership;
pub mod quantalg;
pub mod rep;
pub mod report;
pub mod scalars;
pub mod zelement;

pub use case::Case;
pub use error::{Error, Result};
