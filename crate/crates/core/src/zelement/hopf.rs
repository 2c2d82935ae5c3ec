use std::collections::BTreeMap;

use serde_json::json;

use crate::case::Case;
use crate::error::Result;
use crate::lattice::{Bicharacter, Lattice, Weight};
use crate::membership::ExactEngine;
use crate::quantalg::hopf::{coproduct, counit};
use crate::quantalg::{serre_relators, word_degree, FreeElement, MixedElement, Relator, Word};
use crate::report::Check;
use crate::scalars::{LaurentPoly, RatFunc, Ring};

use super::ZBundle;

/// Δ(Z) − Z⊗1 − K_{sδ̂}⊗Z vanishes in U⁺/I ⊗ U⁺/I bidegree by bidegree.
///
/// Every term of Δ(Z) has the shape K_μX ⊗ Y with X, Y E-words and
/// deg X + deg Y = sδ̂, μ = deg Y. The extreme bidegrees must equal Z⊗1 and
/// K_{sδ̂}⊗Z exactly; every other bidegree is mapped to the tensor square of
/// the quotient by the Serre relators and must be zero there.
pub fn hopf_ideal_check(case: Case, bc: &Bicharacter, zb: &ZBundle) -> Result<Vec<Check>> {
    let lat = Lattice::new(case);
    let r = case.rank();
    let z = zb.z();
    let sd = lat.s_delta();
    let zm = MixedElement::from_e_side(z);
    let delta = coproduct(&zm, bc);

    // μ ↦ right word ↦ left E-side factor
    let mut parts: BTreeMap<Weight, BTreeMap<Word, FreeElement>> = BTreeMap::new();
    let mut shape_ok = true;
    for ((u, v), c) in &delta {
        let mu = word_degree(&v.e, r);
        let shape = u.f.is_empty()
            && v.f.is_empty()
            && u.l.is_zero()
            && v.l.is_zero()
            && v.k.is_zero()
            && u.k == mu
            && &word_degree(&u.e, r) + &mu == sd;
        shape_ok &= shape;
        parts
            .entry(mu)
            .or_default()
            .entry(v.e.clone())
            .or_insert_with(FreeElement::zero)
            .add_term(u.e.clone(), c);
    }
    let mut out = vec![
        Check::pass_if(
            "hopf.bidegrees",
            "every term of Δ(Z) is K_μX⊗Y with deg X + deg Y = sδ̂ and μ = deg Y",
            shape_ok,
        ),
        Check::pass_if("hopf.counit", "ε(Z) = 0", counit(&zm).is_zero()),
    ];

    let zero = Weight::zero(r);
    let empty = Word::new();
    let low = parts.remove(&zero).unwrap_or_default();
    let high = parts.remove(&sd).unwrap_or_default();
    let z_left = low.get(&empty).cloned().unwrap_or_else(FreeElement::zero);
    let mut z_right = FreeElement::zero();
    for (w, x) in &high {
        if let Some(c) = x.coeff(&empty) {
            z_right.add_term(w.clone(), c);
        }
    }
    let extremes =
        low.len() == 1 && high.values().all(|x| x.len() == 1) && &z_left == z && &z_right == z;
    out.push(Check::pass_if(
        "hopf.extremes",
        "the bidegree (sδ̂, 0) part of Δ(Z) is Z⊗1 and the (0, sδ̂) part is K_{sδ̂}⊗Z",
        extremes,
    ));

    let relators: Vec<Relator> = serre_relators(lat.gram(), bc)?;
    let mut eng = ExactEngine::new(&relators, r);
    let q = eng.quotient();
    let lift = |x: &FreeElement| x.map_coeffs(|c: &LaurentPoly| RatFunc::from_poly(c.clone()));
    let mut failing = Vec::new();
    for (mu, by_word) in &parts {
        let mut total: BTreeMap<(usize, usize), RatFunc> = BTreeMap::new();
        for (w, x) in by_word {
            let (_, right) =
                q.normal_form(&lift(&FreeElement::word(w.clone(), LaurentPoly::int(1))));
            let (_, left) = q.normal_form(&lift(x));
            for (a, ca) in &left {
                for (b, cb) in &right {
                    let e = total.entry((*a, *b)).or_insert_with(RatFunc::zero);
                    e.plus_assign(&ca.times(cb));
                }
            }
        }
        if total.values().any(|c| !c.is_zero()) {
            failing.push(mu.to_string());
        }
    }
    out.push(
        Check::pass_if(
            "hopf.ideal",
            "Δ(Z) − Z⊗1 − K_{sδ̂}⊗Z ∈ I⊗U⁺ + U⁺⊗I at every intermediate bidegree",
            failing.is_empty(),
        )
        .with_data(json!({"bidegrees": parts.len(), "failing": failing})),
    );
    Ok(out)
}
