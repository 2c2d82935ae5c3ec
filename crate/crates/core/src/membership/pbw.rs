use std::collections::{BTreeMap, HashMap};

use crate::lattice::Weight;
use crate::liesuper::roots::Multiplicity;

/// dim U(n⁺)_λ from root multiplicities: the coefficient of x^λ in
/// Π_β (1 − x^β)^{−even(β)} (1 + x^β)^{odd(β)}.
///
/// Multiplicities must be known for every root below λ.
pub fn pbw_dim(mults: &BTreeMap<Weight, Multiplicity>, lam: &Weight) -> u128 {
    if !lam.is_nonneg() {
        return 0;
    }
    let mut lower = lam.lower_set();
    lower.sort_by_key(|w| (w.height(), w.clone()));
    let mut series: HashMap<Weight, u128> = lower.iter().map(|w| (w.clone(), 0)).collect();
    series.insert(Weight::zero(lam.rank()), 1);
    for (beta, m) in mults {
        if beta.is_zero() || !beta.le(lam) {
            continue;
        }
        for _ in 0..m.even {
            // multiply by 1/(1 − x^β): ascending so each term feeds later ones
            for w in &lower {
                let prev = w - beta;
                if prev.is_nonneg() {
                    let add = series[&prev];
                    *series.get_mut(w).unwrap() += add;
                }
            }
        }
        for _ in 0..m.odd {
            // multiply by (1 + x^β): descending so each term is used once
            for w in lower.iter().rev() {
                let prev = w - beta;
                if prev.is_nonneg() {
                    let add = series[&prev];
                    *series.get_mut(w).unwrap() += add;
                }
            }
        }
    }
    series[lam]
}
