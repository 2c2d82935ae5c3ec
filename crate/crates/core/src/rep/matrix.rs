use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::scalars::{LaurentPoly, Ring, Var};

/// A sparse N′×N′ matrix over Laurent polynomials, 1-based indices. The loop
/// variable t appears in the entries, so e_ij ⊗ t^l is the entry t^l at (i, j).
#[derive(Clone, PartialEq)]
pub struct RepMatrix {
    size: usize,
    entries: BTreeMap<(usize, usize), LaurentPoly>,
}

impl RepMatrix {
    pub fn zero(size: usize) -> Self {
        RepMatrix {
            size,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zero(size);
        for i in 1..=size {
            m.add(i, i, &LaurentPoly::one());
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &LaurentPoly)> {
        self.entries.iter()
    }

    pub fn get(&self, i: usize, j: usize) -> LaurentPoly {
        self.entries
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(LaurentPoly::zero)
    }

    pub fn add(&mut self, i: usize, j: usize, c: &LaurentPoly) {
        assert!((1..=self.size).contains(&i) && (1..=self.size).contains(&j));
        if c.is_zero() {
            return;
        }
        let e = self.entries.entry((i, j)).or_insert_with(LaurentPoly::zero);
        e.plus_assign(c);
        if e.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn plus(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (&(i, j), c) in &o.entries {
            r.add(i, j, c);
        }
        r
    }

    pub fn minus(&self, o: &Self) -> Self {
        self.plus(&o.scale(&LaurentPoly::int(-1)))
    }

    pub fn scale(&self, k: &LaurentPoly) -> Self {
        let mut r = Self::zero(self.size);
        for (&(i, j), c) in &self.entries {
            r.add(i, j, &c.times(k));
        }
        r
    }

    /// e_ij e_kl = δ_jk e_il.
    pub fn mul(&self, o: &Self) -> Self {
        let mut rows: BTreeMap<usize, Vec<(usize, &LaurentPoly)>> = BTreeMap::new();
        for (&(k, l), c) in &o.entries {
            rows.entry(k).or_default().push((l, c));
        }
        let mut r = Self::zero(self.size);
        for (&(i, j), a) in &self.entries {
            if let Some(row) = rows.get(&j) {
                for &(l, b) in row {
                    r.add(i, l, &a.times(b));
                }
            }
        }
        r
    }

    /// Conjugation by the grading operator t ↦ q^k t: each t^l picks up q^{kl}.
    pub fn twist(&self, k: i32) -> Self {
        let mut r = Self::zero(self.size);
        for (&(i, j), c) in &self.entries {
            r.add(i, j, &c.twist_t(k));
        }
        r
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries.keys().all(|(i, j)| i == j)
    }

    /// If the matrix is c·I for a single c, return c.
    pub fn scalar_value(&self) -> Option<LaurentPoly> {
        if !self.is_diagonal() {
            return None;
        }
        let c = self.get(1, 1);
        (1..=self.size).all(|i| self.get(i, i) == c).then_some(c)
    }

    pub fn map_entries(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        let mut r = Self::zero(self.size);
        for (&(i, j), c) in &self.entries {
            r.add(i, j, &f(c));
        }
        r
    }

    pub fn substitute(&self, f: &dyn Fn(Var) -> LaurentPoly) -> Self {
        self.map_entries(|c| c.substitute(f))
    }
}

impl fmt::Display for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        for (k, ((i, j), c)) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})e[{i},{j}]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Sparse triplets [row, col, Laurent terms].
impl Serialize for RepMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.entries.len()))?;
        for ((i, j), c) in &self.entries {
            seq.serialize_element(&(i, j, c))?;
        }
        seq.end()
    }
}
