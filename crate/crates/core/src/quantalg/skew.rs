use crate::lattice::{Bicharacter, Weight};

use super::free::{word_degree, Coeff, FreeElement, Word};

/// For X in the E-side free algebra, XF_i − F_iX = K_{α_i}·X_K + L_{α_i}·X_L.
/// Returns (X_K, X_L).
pub fn f_commutator<C: Coeff>(
    x: &FreeElement<C>,
    i: usize,
    bc: &Bicharacter,
) -> (FreeElement<C>, FreeElement<C>) {
    let r = bc.rank();
    let ai = Weight::simple(r, i);
    let mut xk = FreeElement::zero();
    let mut xl = FreeElement::zero();
    for (w, c) in x.terms() {
        for p in 0..w.len() {
            if w[p] as usize != i {
                continue;
            }
            let du = word_degree(&w[..p], r);
            let mut uv = Word::from_slice(&w[..p]);
            uv.extend_from_slice(&w[p + 1..]);
            // u·K_a = χ(a, deg u)⁻¹ K_a·u and u·L_a = χ(deg u, a) L_a·u
            let ck = C::from_unit(&bc.chi(&ai, &du).inv().neg());
            let cl = C::from_unit(&bc.chi(&du, &ai));
            xk.add_term(uv.clone(), &c.times(&ck));
            xl.add_term(uv, &c.times(&cl));
        }
    }
    (xk, xl)
}
