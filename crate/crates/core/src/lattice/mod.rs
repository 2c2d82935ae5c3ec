//! The weight lattice V̂, its bilinear form, simple roots and bicharacters.

mod bichar;
mod roots;
mod weight;

pub use bichar::{BicharMode, Bicharacter};
pub use roots::{literal_simple_roots, simple_roots, Lattice};
pub use weight::{EpsWeight, Weight};
