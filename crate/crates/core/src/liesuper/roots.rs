use std::collections::BTreeMap;

use serde::Serialize;

use crate::lattice::Weight;
use crate::scalars::{Field, GaussRational, Ring};

use super::center::{z_classical, z_degree};
use super::{Chevalley, LoopElement};

/// Dimension of a weight space of n⁺, split by parity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Multiplicity {
    pub even: usize,
    pub odd: usize,
}

impl Multiplicity {
    pub fn total(&self) -> usize {
        self.even + self.odd
    }
}

/// Coordinates of a loop element: (t-degree, row, col) for matrix parts.
type Coord = (i64, usize, usize);

fn coords(x: &LoopElement) -> BTreeMap<Coord, GaussRational> {
    let mut out = BTreeMap::new();
    for (&k, m) in x.parts() {
        for (&(i, j), c) in m.entries() {
            out.insert((k, i, j), c.clone());
        }
    }
    out
}

/// Incremental row echelon basis of sparse vectors.
struct Echelon {
    rows: Vec<(Coord, BTreeMap<Coord, GaussRational>)>,
}

impl Echelon {
    fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    /// Reduce `v`; insert it and return true if it is independent.
    fn insert(&mut self, mut v: BTreeMap<Coord, GaussRational>) -> bool {
        for (pivot, row) in &self.rows {
            if let Some(c) = v.get(pivot).cloned() {
                for (k, a) in row {
                    let e = v.entry(*k).or_insert_with(GaussRational::zero);
                    *e = e.minus(&c.times(a));
                    if Ring::is_zero(e) {
                        v.remove(k);
                    }
                }
            }
        }
        let Some((&pivot, lead)) = v.iter().next() else {
            return false;
        };
        let inv = lead.inverse();
        for a in v.values_mut() {
            *a = a.times(&inv);
        }
        self.rows.push((pivot, v));
        true
    }
}

/// Weight spaces of the positive part n⁺ spanned by iterated brackets
/// [ē_j, V_{λ−α_j}], for every λ of height at most `height_bound`.
/// Returns the basis elements alongside the multiplicities.
pub fn weight_spaces(ch: &Chevalley, height_bound: i64) -> BTreeMap<Weight, Vec<LoopElement>> {
    let r = ch.rank();
    let mut spaces: BTreeMap<Weight, Vec<LoopElement>> = BTreeMap::new();
    for i in 0..r {
        spaces.insert(Weight::simple(r, i), vec![ch.e[i].clone()]);
    }
    for h in 2..=height_bound {
        let prev: Vec<(Weight, Vec<LoopElement>)> = spaces
            .iter()
            .filter(|(w, _)| w.height() == h - 1)
            .map(|(w, b)| (w.clone(), b.clone()))
            .collect();
        let mut next: BTreeMap<Weight, (Echelon, Vec<LoopElement>)> = BTreeMap::new();
        for (w, basis) in &prev {
            for j in 0..r {
                let target = w.plus_simple(j, 1);
                let slot = next
                    .entry(target)
                    .or_insert_with(|| (Echelon::new(), Vec::new()));
                for v in basis {
                    let b = ch.bracket(&ch.e[j], v);
                    if !b.is_zero() && slot.0.insert(coords(&b)) {
                        slot.1.push(b);
                    }
                }
            }
        }
        for (w, (_, b)) in next {
            if !b.is_empty() {
                spaces.insert(w, b);
            }
        }
    }
    spaces
}

/// Multiplicities of n⁺ weight spaces up to `height_bound`, by parity.
pub fn root_multiplicities(ch: &Chevalley, height_bound: i64) -> BTreeMap<Weight, Multiplicity> {
    weight_spaces(ch, height_bound)
        .into_iter()
        .map(|(w, basis)| {
            let mut m = Multiplicity::default();
            for b in &basis {
                match b.parity(&ch.pm) {
                    Some(1) => m.odd += 1,
                    _ => m.even += 1,
                }
            }
            (w, m)
        })
        .collect()
}

/// Multiplicities of the image of n⁺ in the quotient by span{Z_k}: a weight
/// space loses one even dimension when it contains a central Z_k.
pub fn centerless_multiplicities(
    ch: &Chevalley,
    height_bound: i64,
) -> BTreeMap<Weight, Multiplicity> {
    let mut mults = root_multiplicities(ch, height_bound);
    for (w, basis) in weight_spaces(ch, height_bound) {
        let Some(&deg) = basis[0].parts().keys().next() else {
            continue;
        };
        let Some(k) = (1..=deg).find(|&k| z_degree(ch.case.tau, k) == deg) else {
            continue;
        };
        let mut ech = Echelon::new();
        for b in &basis {
            ech.insert(coords(b));
        }
        if !ech.insert(coords(&z_classical(ch.case.tau, ch.size(), k))) {
            mults.get_mut(&w).unwrap().even -= 1;
        }
    }
    mults
}

/// The first element of a positive weight space with support outside the
/// positive part: a negative t-degree, or a non-strictly-upper entry at t^0.
pub fn triangular_violation(spaces: &BTreeMap<Weight, Vec<LoopElement>>) -> Option<String> {
    for (w, basis) in spaces {
        for b in basis {
            for (&k, m) in b.parts() {
                for (&(i, j), _) in m.entries() {
                    if k < 0 || (k == 0 && i >= j) {
                        return Some(format!("weight {w}: entry ({i},{j}) at t^{k}"));
                    }
                }
            }
        }
    }
    None
}
