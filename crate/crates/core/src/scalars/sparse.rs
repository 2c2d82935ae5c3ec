use std::collections::BTreeMap;

use super::field::{Field, Ring};

/// A sparse vector: column index to nonzero entry.
pub type SparseVec<F> = BTreeMap<usize, F>;

/// y += a·x, dropping cancelled entries.
pub fn axpy<F: Ring>(y: &mut SparseVec<F>, a: &F, x: &SparseVec<F>) {
    if a.is_zero() {
        return;
    }
    for (k, v) in x {
        let t = a.times(v);
        match y.entry(*k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(t);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().plus_assign(&t);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

pub fn scale<F: Ring>(x: &SparseVec<F>, a: &F) -> SparseVec<F> {
    x.iter()
        .map(|(k, v)| (*k, v.times(a)))
        .filter(|(_, v)| !v.is_zero())
        .collect()
}

/// Row echelon form of sparse rows. Each stored row is normalized to 1 at its
/// pivot, which is its smallest column. Optionally tracks every row as a
/// combination of the tagged input vectors.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    rows: Vec<SparseVec<F>>,
    combos: Vec<SparseVec<F>>,
    pivots: BTreeMap<usize, usize>,
    track: bool,
}

impl<F: Field> Echelon<F> {
    pub fn new(track: bool) -> Self {
        Echelon {
            rows: Vec::new(),
            combos: Vec::new(),
            pivots: BTreeMap::new(),
            track,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.contains_key(&col)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Reduce `v` against the rows. Returns the residual, which has no
    /// entries at pivot columns, and (if tracking) the combination of tagged
    /// inputs that was subtracted.
    pub fn reduce(&self, mut v: SparseVec<F>) -> (SparseVec<F>, SparseVec<F>) {
        let mut combo = SparseVec::new();
        let mut cur = 0usize;
        loop {
            let next = v
                .range(cur..)
                .find(|(k, _)| self.pivots.contains_key(k))
                .map(|(k, c)| (*k, c.clone()));
            let Some((col, c)) = next else { break };
            let r = self.pivots[&col];
            axpy(&mut v, &c.negated(), &self.rows[r]);
            if self.track {
                axpy(&mut combo, &c, &self.combos[r]);
            }
            cur = col + 1;
        }
        (v, combo)
    }

    /// Insert `v` tagged as input `tag`. Returns `None` if `v` was
    /// independent, or `Some(dependency)` with v = Σ dependency[t]·input_t
    /// (only meaningful when tracking).
    pub fn insert(&mut self, v: SparseVec<F>, tag: usize) -> Option<SparseVec<F>> {
        let (res, combo) = self.reduce(v);
        let Some((&pivot, lead)) = res.iter().next() else {
            return Some(combo);
        };
        let inv = lead.inverse();
        let row = scale(&res, &inv);
        let c = if self.track {
            let mut own = SparseVec::new();
            own.insert(tag, F::one());
            axpy(&mut own, &F::from_int(-1), &combo);
            scale(&own, &inv)
        } else {
            SparseVec::new()
        };
        self.pivots.insert(pivot, self.rows.len());
        self.rows.push(row);
        self.combos.push(c);
        None
    }
}

impl<F: Field> Echelon<F> {
    /// Back-substitute so that no row has an entry at another row's pivot.
    /// Afterwards `reduce` needs a single pass.
    pub fn make_reduced(&mut self) {
        let mut order: Vec<(usize, usize)> = self.pivots.iter().map(|(&c, &r)| (c, r)).collect();
        order.reverse();
        for &(_, r) in &order {
            let hits: Vec<(usize, F)> = self.rows[r]
                .iter()
                .skip(1)
                .filter(|(c, _)| self.pivots.contains_key(c))
                .map(|(c, v)| (*c, v.clone()))
                .collect();
            for (c, v) in hits {
                let r2 = self.pivots[&c];
                let (row2, combo2) = (self.rows[r2].clone(), self.combos[r2].clone());
                axpy(&mut self.rows[r], &v.negated(), &row2);
                if self.track {
                    axpy(&mut self.combos[r], &v.negated(), &combo2);
                }
            }
        }
    }
}

/// A basis of the kernel of the linear map whose column images are `cols`
/// (column k is the image of the k-th basis vector).
pub fn kernel<F: Field>(cols: Vec<SparseVec<F>>) -> Vec<SparseVec<F>> {
    let mut ech = Echelon::new(true);
    let mut out = Vec::new();
    for (k, c) in cols.into_iter().enumerate() {
        if let Some(dep) = ech.insert(c, k) {
            let mut v = scale(&dep, &F::from_int(-1));
            v.insert(k, F::one());
            out.push(v);
        }
    }
    out
}
