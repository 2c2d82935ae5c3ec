//! The towers B_i, A_i, the coefficients a_i, the almost central element Z,
//! and its verification modulo the Serre relators.

mod hopf;
mod identities;
mod towers;
mod verify;

pub use hopf::hopf_ideal_check;
pub use identities::{root_vector_targets, root_vectors_tau2, tower_targets, RootLabel, Target};
pub use towers::{build_towers, build_z, coeff_a, ZBundle};
pub use verify::{f_side_factors, verify_central, Checker, Side, TargetResult};
