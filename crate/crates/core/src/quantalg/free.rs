use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::lattice::{Bicharacter, Weight};
use crate::scalars::{LaurentPoly, Ring, SignedMonomial};

/// A word in the letters E_0..E_r (or F_0..F_r), stored as indices.
pub type Word = SmallVec<[u8; 16]>;

/// Multidegree Σ α_{w_k} of a word.
pub fn word_degree(w: &[u8], rank: usize) -> Weight {
    let mut alpha = vec![0i64; rank];
    for &l in w {
        alpha[l as usize] += 1;
    }
    Weight::from_alpha(alpha)
}

/// Coefficient rings that contain the bicharacter values.
pub trait Coeff: Ring {
    fn from_unit(u: &SignedMonomial) -> Self;
}

impl Coeff for LaurentPoly {
    fn from_unit(u: &SignedMonomial) -> Self {
        u.to_poly()
    }
}

impl Coeff for crate::scalars::RatFunc {
    fn from_unit(u: &SignedMonomial) -> Self {
        crate::scalars::RatFunc::from_poly(u.to_poly())
    }
}

/// An element of the free algebra on one family of letters: a finite sum of
/// words with nonzero coefficients.
#[derive(Clone, PartialEq)]
pub struct FreeElement<C = LaurentPoly> {
    terms: BTreeMap<Word, C>,
}

impl<C: Ring> FreeElement<C> {
    pub fn zero() -> Self {
        FreeElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::word(Word::new(), C::one())
    }

    pub fn letter(i: usize) -> Self {
        Self::word(Word::from_slice(&[i as u8]), C::one())
    }

    pub fn word(w: Word, c: C) -> Self {
        let mut x = Self::zero();
        x.add_term(w, &c);
        x
    }

    /// The product of letters in order.
    pub fn monomial(letters: &[usize]) -> Self {
        Self::word(letters.iter().map(|&i| i as u8).collect(), C::one())
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Word, C)>) -> Self {
        let mut x = Self::zero();
        for (w, c) in it {
            x.add_term(w, &c);
        }
        x
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Word, C> {
        self.terms
    }

    pub fn coeff(&self, w: &[u8]) -> Option<&C> {
        self.terms.get(w)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().plus_assign(c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn plus(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), c);
        }
        r
    }

    pub fn minus(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), &c.negated());
        }
        r
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        FreeElement {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.times(k)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&C::from_int(-1))
    }

    /// Concatenation product.
    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                r.add_term(w, &x.times(y));
            }
        }
        r
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// The common multidegree of all words, or `None` if inhomogeneous or zero.
    pub fn degree(&self, rank: usize) -> Option<Weight> {
        let mut it = self.terms.keys();
        let first = word_degree(it.next()?, rank);
        it.all(|w| word_degree(w, rank) == first).then_some(first)
    }

    /// Homogeneous components by multidegree.
    pub fn components(&self, rank: usize) -> BTreeMap<Weight, Self> {
        let mut out: BTreeMap<Weight, Self> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(word_degree(w, rank))
                .or_insert_with(Self::zero)
                .add_term(w.clone(), c);
        }
        out
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> FreeElement<D> {
        FreeElement::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    /// Fallible coefficient map (e.g. evaluation that may hit a pole).
    pub fn try_map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> Option<D>) -> Option<FreeElement<D>> {
        let mut out = FreeElement::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &f(c)?);
        }
        Some(out)
    }

    /// X·Y − k·Y·X.
    pub fn twisted_commutator(&self, o: &Self, k: &C) -> Self {
        self.mul(o).minus(&o.mul(self).scale(k))
    }

    /// Split by first letter: X = Σ_j E_j · X_j.
    pub fn split_first(&self) -> BTreeMap<u8, Self> {
        let mut out: BTreeMap<u8, Self> = BTreeMap::new();
        for (w, c) in &self.terms {
            if let Some((&first, rest)) = w.split_first() {
                out.entry(first)
                    .or_insert_with(Self::zero)
                    .add_term(Word::from_slice(rest), c);
            }
        }
        out
    }

    /// Left multiplication by a word.
    pub fn prepend(&self, prefix: &[u8]) -> Self {
        FreeElement {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| {
                    let mut v = Word::from_slice(prefix);
                    v.extend_from_slice(w);
                    (v, c.clone())
                })
                .collect(),
        }
    }
}

impl<C: Coeff> FreeElement<C> {
    /// The q-bracket ⟦X, Y⟧ = XY − χ(μ, λ)⁻¹ YX for X of degree λ and Y of
    /// degree μ. Zero arguments give zero.
    pub fn q_bracket(&self, o: &Self, bc: &Bicharacter) -> Result<Self> {
        if self.is_zero() || o.is_zero() {
            return Ok(Self::zero());
        }
        let r = bc.rank();
        let lam = self.degree(r).ok_or(Error::Inhomogeneous)?;
        let mu = o.degree(r).ok_or(Error::Inhomogeneous)?;
        let k = C::from_unit(&bc.chi(&mu, &lam).inv());
        Ok(self.twisted_commutator(o, &k))
    }

    pub fn scale_unit(&self, u: &SignedMonomial) -> Self {
        self.scale(&C::from_unit(u))
    }
}

impl<C: Ring + fmt::Display> fmt::Display for FreeElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            if w.is_empty() {
                write!(f, "1")?;
            }
            for l in w {
                write!(f, "E{l}")?;
            }
        }
        Ok(())
    }
}

impl<C: Ring + fmt::Display> fmt::Debug for FreeElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// JSON form: a list of `[word, coefficient]` pairs, words as index lists.
impl<C: Ring + Serialize> Serialize for FreeElement<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (w, c) in &self.terms {
            seq.serialize_element(&(w.as_slice(), c))?;
        }
        seq.end()
    }
}

/// All words with the given letter counts, in lexicographic order.
pub fn words_of_degree(deg: &Weight) -> Vec<Word> {
    fn rec(counts: &mut [i64], cur: &mut Word, left: i64, out: &mut Vec<Word>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for l in 0..counts.len() {
            if counts[l] > 0 {
                counts[l] -= 1;
                cur.push(l as u8);
                rec(counts, cur, left - 1, out);
                cur.pop();
                counts[l] += 1;
            }
        }
    }
    let mut counts = deg.alpha.clone();
    if counts.iter().any(|&c| c < 0) {
        return Vec::new();
    }
    let total = counts.iter().sum();
    let mut out = Vec::new();
    rec(&mut counts, &mut Word::new(), total, &mut out);
    out
}
