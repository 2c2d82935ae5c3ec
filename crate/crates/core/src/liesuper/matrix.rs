use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::scalars::{GaussRational, Ring};

use super::ParityMap;

/// A sparse square matrix over ℚ(√−1) with 1-based indices.
#[derive(Clone, PartialEq, Eq, Default, Serialize)]
pub struct SuperMatrix {
    pub size: usize,
    entries: BTreeMap<(usize, usize), GaussRational>,
}

impl SuperMatrix {
    pub fn zero(size: usize) -> Self {
        SuperMatrix {
            size,
            entries: BTreeMap::new(),
        }
    }

    /// The matrix unit e_ij.
    pub fn unit(size: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(size);
        m.add_entry(i, j, &GaussRational::from_int(1));
        m
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zero(size);
        for i in 1..=size {
            m.add_entry(i, i, &GaussRational::from_int(1));
        }
        m
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &GaussRational)> {
        self.entries.iter()
    }

    pub fn get(&self, i: usize, j: usize) -> GaussRational {
        self.entries
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(GaussRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn add_entry(&mut self, i: usize, j: usize, c: &GaussRational) {
        assert!(i >= 1 && j >= 1 && i <= self.size && j <= self.size);
        if Ring::is_zero(c) {
            return;
        }
        let e = self
            .entries
            .entry((i, j))
            .or_insert_with(GaussRational::zero);
        *e += c;
        if Ring::is_zero(e) {
            self.entries.remove(&(i, j));
        }
    }

    pub fn plus(&self, o: &Self) -> Self {
        let mut m = self.clone();
        for (&(i, j), c) in &o.entries {
            m.add_entry(i, j, c);
        }
        m
    }

    pub fn minus(&self, o: &Self) -> Self {
        self.plus(&o.scale(&GaussRational::from_int(-1)))
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        let mut m = Self::zero(self.size);
        for (&(i, j), a) in &self.entries {
            m.add_entry(i, j, &(a * c));
        }
        m
    }

    /// Ordinary matrix product.
    pub fn matmul(&self, o: &Self) -> Self {
        let mut by_row: BTreeMap<usize, Vec<(usize, &GaussRational)>> = BTreeMap::new();
        for (&(k, l), b) in &o.entries {
            by_row.entry(k).or_default().push((l, b));
        }
        let mut m = Self::zero(self.size);
        for (&(i, j), a) in &self.entries {
            if let Some(row) = by_row.get(&j) {
                for &(l, b) in row {
                    m.add_entry(i, l, &(a * b));
                }
            }
        }
        m
    }

    /// Super bracket, extended bilinearly from
    /// [e_ij, e_kl] = δ_jk e_il − (−1)^{(p(i)+p(j))(p(k)+p(l))} δ_il e_kj.
    pub fn bracket(&self, o: &Self, pm: &ParityMap) -> Self {
        let mut m = Self::zero(self.size);
        for (&(i, j), a) in &self.entries {
            let pa = pm.p(i) ^ pm.p(j);
            for (&(k, l), b) in &o.entries {
                if j == k {
                    m.add_entry(i, l, &(a * b));
                }
                if i == l {
                    let pb = pm.p(k) ^ pm.p(l);
                    let ab = a * b;
                    if pa & pb == 1 {
                        m.add_entry(k, j, &ab);
                    } else {
                        m.add_entry(k, j, &-ab);
                    }
                }
            }
        }
        m
    }

    /// str(e_ij) = δ_ij (−1)^{p(i)}.
    pub fn supertrace(&self, pm: &ParityMap) -> GaussRational {
        let mut s = GaussRational::zero();
        for (&(i, j), a) in &self.entries {
            if i == j {
                if pm.p(i) == 0 {
                    s += a;
                } else {
                    s -= a;
                }
            }
        }
        s
    }

    /// `Some(parity)` when every nonzero entry has the same parity.
    pub fn parity(&self, pm: &ParityMap) -> Option<u8> {
        let mut it = self.entries.keys().map(|&(i, j)| pm.p(i) ^ pm.p(j));
        let first = it.next().unwrap_or(0);
        it.all(|p| p == first).then_some(first)
    }
}

impl fmt::Display for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(&(i, j), c)| format!("({c})e_{i},{j}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
