//! Classical side: matrix superalgebras, loop algebras, automorphisms and
//! the Chevalley realization of sl^(τ)(M|M).

pub mod automorphism;
pub mod center;
mod chevalley;
mod loopalg;
mod matrix;
mod parity;
pub mod relations;
pub mod roots;
pub mod suite;

pub use chevalley::Chevalley;
pub use loopalg::LoopElement;
pub use matrix::SuperMatrix;
pub use parity::ParityMap;
