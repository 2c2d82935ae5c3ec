//! The vector representation Ψ on K^{N′} ⊗ K[t, t⁻¹].

mod check;
pub mod classical;
mod matrix;
mod psi;

pub use check::{
    check_rep, classical_check, psi_z, psi_z_checks, rep_relations, PsiZ, RepRelation,
};
pub use classical::{classical_limit, ClassicalLimit};
pub use matrix::RepMatrix;
pub use psi::Psi;
