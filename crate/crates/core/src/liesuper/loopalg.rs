use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::scalars::{GaussRational, Ring};

use super::{ParityMap, SuperMatrix};

/// An element Σ X_k ⊗ t^k + c_coeff·c + d_coeff·t(d/dt) of the loop algebra
/// gl^(1).
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct LoopElement {
    pub size: usize,
    parts: BTreeMap<i64, SuperMatrix>,
    pub c_coeff: GaussRational,
    pub d_coeff: GaussRational,
}

impl LoopElement {
    pub fn zero(size: usize) -> Self {
        LoopElement {
            size,
            parts: BTreeMap::new(),
            c_coeff: GaussRational::zero(),
            d_coeff: GaussRational::zero(),
        }
    }

    /// X ⊗ t^k.
    pub fn from_matrix(x: SuperMatrix, k: i64) -> Self {
        let mut e = Self::zero(x.size);
        if !x.is_zero() {
            e.parts.insert(k, x);
        }
        e
    }

    /// The central element c.
    pub fn c(size: usize) -> Self {
        LoopElement {
            c_coeff: GaussRational::from_int(1),
            ..Self::zero(size)
        }
    }

    /// The derivation t·d/dt.
    pub fn derivation(size: usize) -> Self {
        LoopElement {
            d_coeff: GaussRational::from_int(1),
            ..Self::zero(size)
        }
    }

    pub fn parts(&self) -> &BTreeMap<i64, SuperMatrix> {
        &self.parts
    }

    pub fn part(&self, k: i64) -> SuperMatrix {
        self.parts
            .get(&k)
            .cloned()
            .unwrap_or_else(|| SuperMatrix::zero(self.size))
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty() && Ring::is_zero(&self.c_coeff) && Ring::is_zero(&self.d_coeff)
    }

    fn add_part(&mut self, k: i64, x: &SuperMatrix) {
        if x.is_zero() {
            return;
        }
        let sum = match self.parts.get(&k) {
            Some(y) => y.plus(x),
            None => x.clone(),
        };
        if sum.is_zero() {
            self.parts.remove(&k);
        } else {
            self.parts.insert(k, sum);
        }
    }

    pub fn plus(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (&k, x) in &o.parts {
            r.add_part(k, x);
        }
        r.c_coeff += &o.c_coeff;
        r.d_coeff += &o.d_coeff;
        r
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        let mut r = Self::zero(self.size);
        for (&k, x) in &self.parts {
            r.add_part(k, &x.scale(c));
        }
        r.c_coeff = &self.c_coeff * c;
        r.d_coeff = &self.d_coeff * c;
        r
    }

    pub fn minus(&self, o: &Self) -> Self {
        self.plus(&o.scale(&GaussRational::from_int(-1)))
    }

    /// The affine superbracket:
    /// [X⊗t^x, Y⊗t^y] = [X,Y]⊗t^{x+y} + x δ_{x+y,0} str(XY) c,
    /// [t d/dt, X⊗t^x] = x X⊗t^x, c central.
    pub fn bracket(&self, o: &Self, pm: &ParityMap) -> Self {
        let mut r = Self::zero(self.size);
        for (&x, a) in &self.parts {
            for (&y, b) in &o.parts {
                r.add_part(x + y, &a.bracket(b, pm));
                if x + y == 0 && x != 0 {
                    let s = a.matmul(b).supertrace(pm);
                    r.c_coeff += &(&s * &GaussRational::from_int(x));
                }
            }
        }
        if !Ring::is_zero(&self.d_coeff) {
            for (&y, b) in &o.parts {
                r.add_part(y, &b.scale(&(&self.d_coeff * &GaussRational::from_int(y))));
            }
        }
        if !Ring::is_zero(&o.d_coeff) {
            for (&x, a) in &self.parts {
                r.add_part(x, &a.scale(&(&o.d_coeff * &GaussRational::from_int(-x))));
            }
        }
        r
    }

    /// Parity of the matrix parts, if homogeneous (c and d are even).
    pub fn parity(&self, pm: &ParityMap) -> Option<u8> {
        let mut ps = self.parts.values().map(|x| x.parity(pm));
        let mut out = None;
        for p in ps.by_ref() {
            let p = p?;
            match out {
                None => out = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        let has_central = !Ring::is_zero(&self.c_coeff) || !Ring::is_zero(&self.d_coeff);
        match (out, has_central) {
            (Some(1), true) => None,
            (Some(p), _) => Some(p),
            (None, _) => Some(0),
        }
    }

    /// `Some(λ)` with `self = λ·other`, if proportional (zero counts as λ=0).
    pub fn ratio_to(&self, other: &Self) -> Option<GaussRational> {
        if self.is_zero() {
            return Some(GaussRational::zero());
        }
        let (k, x) = other.parts.iter().next()?;
        let (&(i, j), c) = x.entries().next()?;
        let lambda = &self.part(*k).get(i, j) / c;
        (*self == other.scale(&lambda)).then_some(lambda)
    }
}

impl fmt::Display for LoopElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .parts
            .iter()
            .map(|(k, x)| format!("[{x}]t^{k}"))
            .collect();
        if !Ring::is_zero(&self.c_coeff) {
            parts.push(format!("({})c", self.c_coeff));
        }
        if !Ring::is_zero(&self.d_coeff) {
            parts.push(format!("({})d", self.d_coeff));
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for LoopElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
