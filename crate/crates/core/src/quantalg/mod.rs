//! The free algebra on K_a, L_a, E_i, F_i with the commutation relations,
//! its Hopf structure, Serre-type relators and the degreewise radical.

pub mod free;
pub mod hopf;
pub mod mixed;
pub mod radical;
pub mod serre;
pub mod skew;

pub use free::{word_degree, words_of_degree, Coeff, FreeElement, Word};
pub use mixed::{normal_form, Letter, MixedElement, NormalElement, NormalKey, Strategy};
pub use serre::{serre_relators, Relator, RelatorFamily};
