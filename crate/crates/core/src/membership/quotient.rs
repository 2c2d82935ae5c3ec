use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::lattice::Weight;
use crate::quantalg::{FreeElement, Word};
use crate::scalars::sparse::{Echelon, SparseVec};
use crate::scalars::Field;

/// A relator over the working field, pre-split by first letter.
#[derive(Clone)]
pub struct FieldRelator<F> {
    pub name: String,
    pub degree: Weight,
    pub element: FreeElement<F>,
    parts: Vec<(u8, FreeElement<F>)>,
}

impl<F: Field> FieldRelator<F> {
    pub fn new(name: String, degree: Weight, element: FreeElement<F>) -> Self {
        let parts = element.split_first().into_iter().collect();
        FieldRelator {
            name,
            degree,
            element,
            parts,
        }
    }
}

/// One multidegree μ of the quotient by the relator ideal.
///
/// The ideal satisfies I_μ = Σ_j E_j·I_{μ−α_j} + Σ_r r·A_{μ−deg r}, so the
/// quotient at μ is ⊕_j E_j ⊗ Q_{μ−α_j} modulo the images of r·s for
/// standard words s of degree μ − deg r. Columns are pairs (j, s); the
/// non-pivot columns are the standard words of Q_μ.
#[derive(Clone)]
struct Level<F> {
    col_of: HashMap<(u8, usize), usize>,
    col_word: Vec<Word>,
    ech: Echelon<F>,
    gens: Vec<(usize, usize)>,
    standard: Vec<usize>,
    std_of_col: HashMap<usize, usize>,
}

/// Degree-truncated quotient of the free algebra by a two-sided ideal
/// generated by homogeneous relators, built lazily level by level.
pub struct Quotient<F> {
    rank: usize,
    relators: Vec<FieldRelator<F>>,
    track: bool,
    levels: BTreeMap<Weight, Level<F>>,
}

/// One term c·u·r·v of an ideal decomposition.
#[derive(Clone, Debug, PartialEq)]
pub struct Sandwich<F> {
    pub left: Word,
    pub relator: usize,
    pub right: Word,
    pub coeff: F,
}

impl<F: Field> Quotient<F> {
    /// `track` keeps elimination histories, needed for certificates.
    pub fn new(rank: usize, relators: Vec<FieldRelator<F>>, track: bool) -> Self {
        let mut levels = BTreeMap::new();
        let zero = Weight::zero(rank);
        let mut std_of_col = HashMap::new();
        std_of_col.insert(0, 0);
        levels.insert(
            zero,
            Level {
                col_of: HashMap::new(),
                col_word: vec![Word::new()],
                ech: Echelon::new(track),
                gens: Vec::new(),
                standard: vec![0],
                std_of_col,
            },
        );
        Quotient {
            rank,
            relators,
            track,
            levels,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn relators(&self) -> &[FieldRelator<F>] {
        &self.relators
    }

    /// Build every level below and at `lam`, one height at a time, levels of
    /// equal height in parallel.
    pub fn ensure(&mut self, lam: &Weight) {
        if self.levels.contains_key(lam) {
            return;
        }
        let mut todo: BTreeMap<i64, Vec<Weight>> = BTreeMap::new();
        for mu in lam.lower_set() {
            if !self.levels.contains_key(&mu) {
                todo.entry(mu.height()).or_default().push(mu);
            }
        }
        for (_, layer) in todo {
            let built: Vec<(Weight, Level<F>)> = layer
                .into_par_iter()
                .map(|mu| {
                    let lv = self.build(&mu);
                    (mu, lv)
                })
                .collect();
            self.levels.extend(built);
        }
    }

    fn level(&self, mu: &Weight) -> &Level<F> {
        self.levels
            .get(mu)
            .unwrap_or_else(|| panic!("level {mu} not built"))
    }

    fn build(&self, mu: &Weight) -> Level<F> {
        let mut col_of = HashMap::new();
        let mut col_word = Vec::new();
        for j in 0..self.rank {
            let below = mu.plus_simple(j, -1);
            if !below.is_nonneg() {
                continue;
            }
            for (s, w) in self.standard_words(&below).iter().enumerate() {
                col_of.insert((j as u8, s), col_word.len());
                let mut v = Word::from_slice(&[j as u8]);
                v.extend_from_slice(w);
                col_word.push(v);
            }
        }
        let mut ech = Echelon::new(self.track);
        let mut gens = Vec::new();
        for (ri, r) in self.relators.iter().enumerate() {
            let nu = mu - &r.degree;
            if !nu.is_nonneg() {
                continue;
            }
            for s in 0..self.dim_at(&nu) {
                let row = self.sandwich_columns(r, &nu, s, &col_of);
                ech.insert(row, gens.len());
                gens.push((ri, s));
            }
        }
        ech.make_reduced();
        let standard: Vec<usize> = (0..col_word.len()).filter(|c| !ech.is_pivot(*c)).collect();
        let std_of_col = standard.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        Level {
            col_of,
            col_word,
            ech,
            gens,
            standard,
            std_of_col,
        }
    }

    /// Column coordinates of r·s, for s the `s`-th standard word at ν.
    fn sandwich_columns(
        &self,
        r: &FieldRelator<F>,
        nu: &Weight,
        s: usize,
        col_of: &HashMap<(u8, usize), usize>,
    ) -> SparseVec<F> {
        let mut row = SparseVec::new();
        for (j, rj) in &r.parts {
            let mut v = SparseVec::new();
            for (w, c) in rj.terms() {
                let mut u = SparseVec::new();
                u.insert(s, c.clone());
                let u = self.left_mul_word(w, nu, u);
                crate::scalars::sparse::axpy(&mut v, &F::one(), &u);
            }
            for (k, c) in v {
                row.insert(col_of[&(*j, k)], c);
            }
        }
        row
    }

    /// Dimension of the quotient at `mu` (which must be built).
    pub fn dim_at(&self, mu: &Weight) -> usize {
        self.level(mu).standard.len()
    }

    pub fn dim(&mut self, mu: &Weight) -> usize {
        self.ensure(mu);
        self.dim_at(mu)
    }

    /// The standard words at `mu`, in lexicographic order.
    pub fn standard_words(&self, mu: &Weight) -> Vec<Word> {
        let lv = self.level(mu);
        lv.standard
            .iter()
            .map(|&c| lv.col_word[c].clone())
            .collect()
    }

    fn standard_word(&self, mu: &Weight, s: usize) -> &Word {
        let lv = self.level(mu);
        &lv.col_word[lv.standard[s]]
    }

    /// E_j · v for v given in standard coordinates at `nu`.
    pub fn left_mul(&self, j: usize, nu: &Weight, v: &SparseVec<F>) -> SparseVec<F> {
        let (d, mu) = self.lift(j, nu, v);
        let lv = self.level(&mu);
        let (res, _) = lv.ech.reduce(d);
        res.into_iter()
            .map(|(c, x)| (lv.std_of_col[&c], x))
            .collect()
    }

    fn lift(&self, j: usize, nu: &Weight, v: &SparseVec<F>) -> (SparseVec<F>, Weight) {
        let mu = nu.plus_simple(j, 1);
        let lv = self.level(&mu);
        let d = v
            .iter()
            .map(|(s, x)| (lv.col_of[&(j as u8, *s)], x.clone()))
            .collect();
        (d, mu)
    }

    /// w · v, applying the letters of `w` from right to left.
    pub fn left_mul_word(&self, w: &[u8], nu: &Weight, mut v: SparseVec<F>) -> SparseVec<F> {
        let mut deg = nu.clone();
        for &l in w.iter().rev() {
            v = self.left_mul(l as usize, &deg, &v);
            deg = deg.plus_simple(l as usize, 1);
        }
        v
    }

    /// Normal form of a homogeneous element in standard coordinates.
    pub fn normal_form(&mut self, x: &FreeElement<F>) -> (Weight, SparseVec<F>) {
        let Some(deg) = x.degree(self.rank) else {
            return (Weight::zero(self.rank), SparseVec::new());
        };
        self.ensure(&deg);
        let v = self.nf_at(x, &deg);
        (deg, v)
    }

    fn nf_at(&self, x: &FreeElement<F>, mu: &Weight) -> SparseVec<F> {
        if mu.is_zero() {
            let mut v = SparseVec::new();
            if let Some(c) = x.coeff(&[]) {
                v.insert(0, c.clone());
            }
            return v;
        }
        let (res, _) = self.level(mu).ech.reduce(self.columns_of(x, mu));
        let lv = self.level(mu);
        res.into_iter()
            .map(|(c, v)| (lv.std_of_col[&c], v))
            .collect()
    }

    /// Unreduced column coordinates Σ_j (j, NF(X_j)) of X = Σ_j E_j X_j.
    fn columns_of(&self, x: &FreeElement<F>, mu: &Weight) -> SparseVec<F> {
        let lv = self.level(mu);
        let parts: Vec<(u8, FreeElement<F>)> = x.split_first().into_iter().collect();
        let sub: Vec<(u8, SparseVec<F>)> = parts
            .par_iter()
            .map(|(j, xj)| (*j, self.nf_at(xj, &mu.plus_simple(*j as usize, -1))))
            .collect();
        let mut d = SparseVec::new();
        for (j, v) in sub {
            for (s, c) in v {
                d.insert(lv.col_of[&(j, s)], c);
            }
        }
        d
    }

    /// Whether a homogeneous element lies in the ideal.
    pub fn contains(&mut self, x: &FreeElement<F>) -> bool {
        self.normal_form(x).1.is_empty()
    }

    /// Express a homogeneous ideal element as Σ c·u·r·v. Requires tracking.
    /// Returns `None` if the element is not in the ideal.
    pub fn decompose(&mut self, x: &FreeElement<F>) -> Option<Vec<Sandwich<F>>> {
        assert!(self.track, "decomposition needs a tracking quotient");
        let Some(deg) = x.degree(self.rank) else {
            return x.is_zero().then(Vec::new);
        };
        self.ensure(&deg);
        let mut out = Vec::new();
        self.decompose_at(x.clone(), &deg, &mut Word::new(), &mut out)
            .then_some(out)
    }

    fn decompose_at(
        &self,
        x: FreeElement<F>,
        mu: &Weight,
        prefix: &mut Word,
        out: &mut Vec<Sandwich<F>>,
    ) -> bool {
        if x.is_zero() {
            return true;
        }
        if mu.is_zero() {
            return false;
        }
        let lv = self.level(mu);
        let (res, combo) = lv.ech.reduce(self.columns_of(&x, mu));
        if !res.is_empty() {
            return false;
        }
        let mut y = x;
        for (g, c) in combo {
            let (ri, s) = lv.gens[g];
            let r = &self.relators[ri];
            let nu = mu - &r.degree;
            let right = self.standard_word(&nu, s).clone();
            let term = r.element.mul(&FreeElement::word(right.clone(), F::one()));
            y = y.minus(&term.scale(&c));
            out.push(Sandwich {
                left: prefix.clone(),
                relator: ri,
                right,
                coeff: c,
            });
        }
        for (j, yj) in y.split_first() {
            prefix.push(j);
            let ok = self.decompose_at(yj, &mu.plus_simple(j as usize, -1), prefix, out);
            prefix.pop();
            if !ok {
                return false;
            }
        }
        true
    }

    /// Σ c·u·r·v in the free algebra.
    pub fn expand(&self, parts: &[Sandwich<F>]) -> FreeElement<F> {
        let mut total = BTreeMap::<Word, F>::new();
        for p in parts {
            for (w, c) in self.relators[p.relator].element.terms() {
                let mut full = p.left.clone();
                full.extend_from_slice(w);
                full.extend_from_slice(&p.right);
                let e = total.entry(full).or_insert_with(F::zero);
                e.plus_assign(&c.times(&p.coeff));
            }
        }
        FreeElement::from_terms(total)
    }
}
