use std::collections::{BTreeMap, HashMap};

use crate::lattice::{Bicharacter, Weight};
use crate::scalars::sparse::{kernel, Echelon, SparseVec};
use crate::scalars::{Field, LaurentPoly};

use super::free::{words_of_degree, FreeElement, Word};
use super::skew::f_commutator;

/// One degree of the radical: a basis in word coordinates.
pub struct RadicalComponent<F> {
    pub degree: Weight,
    pub words: Vec<Word>,
    index: HashMap<Word, usize>,
    pub basis: Vec<SparseVec<F>>,
    ech: Echelon<F>,
}

impl<F: Field> RadicalComponent<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn free_dim(&self) -> usize {
        self.words.len()
    }

    fn coords(&self, x: &FreeElement<F>) -> SparseVec<F> {
        x.terms().map(|(w, c)| (self.index[w], c.clone())).collect()
    }

    /// Residual of `x` modulo the radical component (zero iff contained).
    fn residual(&self, x: &FreeElement<F>) -> SparseVec<F> {
        self.ech.reduce(self.coords(x)).0
    }

    pub fn basis_elements(&self) -> Vec<FreeElement<F>> {
        self.basis
            .iter()
            .map(|v| {
                FreeElement::from_terms(v.iter().map(|(k, c)| (self.words[*k].clone(), c.clone())))
            })
            .collect()
    }
}

/// Degreewise computation of the radical: X of degree λ lies in it iff for
/// every i both parts of XF_i − F_iX = K_{α_i}X_K + L_{α_i}X_L lie in it at
/// degree λ − α_i; the degree-0 part is {0}.
pub struct Radical<'a, F> {
    bc: &'a Bicharacter,
    conv: &'a dyn Fn(&LaurentPoly) -> F,
    comps: BTreeMap<Weight, RadicalComponent<F>>,
}

impl<'a, F: Field> Radical<'a, F> {
    pub fn new(bc: &'a Bicharacter, conv: &'a dyn Fn(&LaurentPoly) -> F) -> Self {
        Radical {
            bc,
            conv,
            comps: BTreeMap::new(),
        }
    }

    /// The component at `lam`, computing every lower component first.
    pub fn component(&mut self, lam: &Weight) -> &RadicalComponent<F> {
        let mut lower = lam.lower_set();
        lower.sort_by_key(|w| (w.height(), w.clone()));
        for mu in lower {
            if !self.comps.contains_key(&mu) {
                let c = self.compute(&mu);
                self.comps.insert(mu, c);
            }
        }
        &self.comps[lam]
    }

    fn compute(&self, mu: &Weight) -> RadicalComponent<F> {
        let r = self.bc.rank();
        let words = words_of_degree(mu);
        let index: HashMap<Word, usize> = words
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, w)| (w, k))
            .collect();
        let basis = if mu.is_zero() {
            Vec::new()
        } else {
            // column image of each word: the residuals of X_K, X_L modulo the
            // lower radical, stacked over i and over the two parts
            let mut offsets = Vec::new();
            let mut off = 0usize;
            for i in 0..r {
                let below = mu.plus_simple(i, -1);
                offsets.push(off);
                if below.is_nonneg() {
                    off += 2 * words_of_degree(&below).len();
                }
            }
            let cols: Vec<SparseVec<F>> = words
                .iter()
                .map(|w| {
                    let x = FreeElement::<LaurentPoly>::word(w.clone(), LaurentPoly::int(1));
                    let mut col = SparseVec::new();
                    for i in 0..r {
                        let below = mu.plus_simple(i, -1);
                        if !below.is_nonneg() {
                            continue;
                        }
                        let comp = &self.comps[&below];
                        let n = comp.free_dim();
                        let (xk, xl) = f_commutator(&x, i, self.bc);
                        for (part, y) in [(0, xk), (1, xl)] {
                            let y = y.map_coeffs(|c| (self.conv)(c));
                            for (k, c) in comp.residual(&y) {
                                col.insert(offsets[i] + part * n + k, c);
                            }
                        }
                    }
                    col
                })
                .collect();
            kernel(cols)
        };
        let mut ech = Echelon::new(false);
        for (k, v) in basis.iter().enumerate() {
            ech.insert(v.clone(), k);
        }
        RadicalComponent {
            degree: mu.clone(),
            words,
            index,
            basis,
            ech,
        }
    }

    /// Whether a homogeneous element lies in the radical.
    pub fn contains(&mut self, x: &FreeElement<LaurentPoly>) -> bool {
        let Some(deg) = x.degree(self.bc.rank()) else {
            return x.is_zero();
        };
        let y = x.map_coeffs(|c| (self.conv)(c));
        self.component(&deg).residual(&y).is_empty()
    }
}
