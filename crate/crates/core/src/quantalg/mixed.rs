use std::collections::BTreeMap;
use std::fmt;

use crate::lattice::{Bicharacter, Weight};
use crate::scalars::{LaurentPoly, Ring};

use super::free::{Coeff, FreeElement, Word};

/// A letter of the full alphabet. `G(a, b)` stands for K_a·L_b (the group
/// letters commute, so every run of them merges into one).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    F(u8),
    G(Weight, Weight),
    E(u8),
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::F(i) => write!(f, "F{i}"),
            Letter::E(i) => write!(f, "E{i}"),
            Letter::G(a, b) => {
                let mut first = true;
                if !a.is_zero() {
                    write!(f, "K{a}")?;
                    first = false;
                }
                if !b.is_zero() || first {
                    write!(f, "L{b}")?;
                }
                Ok(())
            }
        }
    }
}

fn is_identity(l: &Letter) -> bool {
    matches!(l, Letter::G(a, b) if a.is_zero() && b.is_zero())
}

/// A word in the full alphabet.
pub type MixedWord = Vec<Letter>;

/// An element of the free algebra on E_i, F_i, K_a, L_b before any
/// relations are applied.
#[derive(Clone, PartialEq)]
pub struct MixedElement<C = LaurentPoly> {
    terms: BTreeMap<MixedWord, C>,
}

impl<C: Ring> MixedElement<C> {
    pub fn zero() -> Self {
        MixedElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_word(Vec::new(), C::one())
    }

    pub fn from_word(w: MixedWord, c: C) -> Self {
        let mut x = Self::zero();
        x.add_term(w, &c);
        x
    }

    pub fn e(i: usize) -> Self {
        Self::from_word(vec![Letter::E(i as u8)], C::one())
    }

    pub fn f(i: usize) -> Self {
        Self::from_word(vec![Letter::F(i as u8)], C::one())
    }

    pub fn k(a: Weight) -> Self {
        let zero = Weight::zero(a.rank());
        Self::from_word(vec![Letter::G(a, zero)], C::one())
    }

    pub fn l(b: Weight) -> Self {
        let zero = Weight::zero(b.rank());
        Self::from_word(vec![Letter::G(zero, b)], C::one())
    }

    /// Embed an element of the free algebra on the E_i.
    pub fn from_e_side(x: &FreeElement<C>) -> Self {
        let mut out = Self::zero();
        for (w, c) in x.terms() {
            out.add_term(w.iter().map(|&l| Letter::E(l)).collect(), c);
        }
        out
    }

    /// Embed an element of the free algebra on the F_i (same words, F letters).
    pub fn from_f_side(x: &FreeElement<C>) -> Self {
        let mut out = Self::zero();
        for (w, c) in x.terms() {
            out.add_term(w.iter().map(|&l| Letter::F(l)).collect(), c);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MixedWord, &C)> {
        self.terms.iter()
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

    pub fn add_term(&mut self, w: MixedWord, c: &C) {
        if c.is_zero() {
            return;
        }
        let w: MixedWord = w.into_iter().filter(|l| !is_identity(l)).collect();
        let e = self.terms.entry(w).or_insert_with(C::zero);
        e.plus_assign(c);
        if e.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
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
        let mut r = Self::zero();
        for (w, c) in &self.terms {
            r.add_term(w.clone(), &c.times(k));
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let mut w = a.clone();
                w.extend(b.iter().cloned());
                r.add_term(w, &x.times(y));
            }
        }
        r
    }

    /// The swap E_i ↔ F_i, K_a ↔ L_a on letters (an algebra map between
    /// the algebras for χ^op and χ).
    pub fn swap(&self) -> Self {
        let mut r = Self::zero();
        for (w, c) in &self.terms {
            let v = w
                .iter()
                .map(|l| match l {
                    Letter::E(i) => Letter::F(*i),
                    Letter::F(i) => Letter::E(*i),
                    Letter::G(a, b) => Letter::G(b.clone(), a.clone()),
                })
                .collect();
            r.add_term(v, c);
        }
        r
    }
}

impl<C: Ring + fmt::Display> fmt::Display for MixedElement<C> {
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
                write!(f, "{l}")?;
            }
        }
        Ok(())
    }
}

impl<C: Ring + fmt::Display> fmt::Debug for MixedElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A basis element F-word · K_a L_b · E-word of the triangular decomposition.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct NormalKey {
    pub f: Word,
    pub k: Weight,
    pub l: Weight,
    pub e: Word,
}

impl NormalKey {
    pub fn to_word(&self) -> MixedWord {
        let mut w: MixedWord = self.f.iter().map(|&i| Letter::F(i)).collect();
        w.push(Letter::G(self.k.clone(), self.l.clone()));
        w.extend(self.e.iter().map(|&i| Letter::E(i)));
        w.retain(|l| !is_identity(l));
        w
    }
}

impl fmt::Display for NormalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.to_word();
        if w.is_empty() {
            return write!(f, "1");
        }
        for l in w {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// An element written in the triangular basis.
#[derive(Clone, PartialEq)]
pub struct NormalElement<C = LaurentPoly> {
    terms: BTreeMap<NormalKey, C>,
}

impl<C: Ring> NormalElement<C> {
    pub fn zero() -> Self {
        NormalElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NormalKey, &C)> {
        self.terms.iter()
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

    pub fn add_term(&mut self, k: NormalKey, c: &C) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k.clone()).or_insert_with(C::zero);
        e.plus_assign(c);
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn minus(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(k.clone(), &c.negated());
        }
        r
    }

    pub fn to_mixed(&self) -> MixedElement<C> {
        let mut r = MixedElement::zero();
        for (k, c) in &self.terms {
            r.add_term(k.to_word(), c);
        }
        r
    }

    /// The E-side factor of each (F-word, K, L) block: X = Σ F·K_aL_b·X_{F,a,b}.
    pub fn e_factors(&self) -> BTreeMap<(Word, Weight, Weight), FreeElement<C>> {
        let mut out: BTreeMap<(Word, Weight, Weight), FreeElement<C>> = BTreeMap::new();
        for (k, c) in &self.terms {
            out.entry((k.f.clone(), k.k.clone(), k.l.clone()))
                .or_insert_with(FreeElement::zero)
                .add_term(k.e.clone(), c);
        }
        out
    }
}

impl<C: Ring + fmt::Display> fmt::Display for NormalElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){k}")?;
        }
        Ok(())
    }
}

impl<C: Ring + fmt::Display> fmt::Debug for NormalElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Which out-of-order adjacent pair is rewritten first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

fn rank_of(l: &Letter) -> u8 {
    match l {
        Letter::F(_) => 0,
        Letter::G(..) => 1,
        Letter::E(_) => 2,
    }
}

fn needs_rewrite(x: &Letter, y: &Letter) -> bool {
    rank_of(x) > rank_of(y) || (rank_of(x) == 1 && rank_of(y) == 1)
}

/// The rewrite of one adjacent pair as a sum of replacement words.
fn rewrite_pair<C: Coeff>(x: &Letter, y: &Letter, bc: &Bicharacter) -> Vec<(MixedWord, C)> {
    let r = bc.rank();
    let alpha = |i: u8| Weight::simple(r, i as usize);
    // the factor χ(a, α_i)⁻¹ χ(α_i, b) for moving E_i right-to-left past
    // K_aL_b, or K_aL_b past F_i
    let twist = |a: &Weight, b: &Weight, i: u8| {
        let ai = alpha(i);
        C::from_unit(&bc.chi(a, &ai).inv().mul(&bc.chi(&ai, b)))
    };
    match (x, y) {
        (Letter::G(a, b), Letter::G(c, d)) => {
            vec![(vec![Letter::G(a + c, b + d)], C::one())]
        }
        (Letter::E(i), Letter::F(j)) => {
            let mut out = vec![(vec![Letter::F(*j), Letter::E(*i)], C::one())];
            if i == j {
                let z = Weight::zero(r);
                out.push((vec![Letter::G(alpha(*i), z.clone())], C::from_int(-1)));
                out.push((vec![Letter::G(z, alpha(*i))], C::one()));
            }
            out
        }
        (Letter::E(i), Letter::G(a, b)) => {
            vec![(vec![y.clone(), x.clone()], twist(a, b, *i))]
        }
        (Letter::G(a, b), Letter::F(i)) => {
            vec![(vec![y.clone(), x.clone()], twist(a, b, *i))]
        }
        _ => unreachable!("pair is already ordered"),
    }
}

fn to_key(w: &[Letter], rank: usize) -> NormalKey {
    let mut key = NormalKey {
        f: Word::new(),
        k: Weight::zero(rank),
        l: Weight::zero(rank),
        e: Word::new(),
    };
    for l in w {
        match l {
            Letter::F(i) => key.f.push(*i),
            Letter::E(i) => key.e.push(*i),
            Letter::G(a, b) => {
                key.k = a.clone();
                key.l = b.clone();
            }
        }
    }
    key
}

/// Rewrite into the triangular basis F-word · K_aL_b · E-word using
/// E_iF_j − F_jE_i = δ_ij(−K_{α_i} + L_{α_i}) and the K/L commutation rules.
pub fn normal_form<C: Coeff>(
    x: &MixedElement<C>,
    bc: &Bicharacter,
    strategy: Strategy,
) -> NormalElement<C> {
    let rank = bc.rank();
    let mut out = NormalElement::zero();
    let mut pending: BTreeMap<MixedWord, C> = x.terms.clone();
    while !pending.is_empty() {
        let mut next: MixedWord;
        let mut produced: MixedElement<C> = MixedElement::zero();
        for (w, c) in std::mem::take(&mut pending) {
            let pos = match strategy {
                Strategy::Leftmost => {
                    (0..w.len().saturating_sub(1)).find(|&p| needs_rewrite(&w[p], &w[p + 1]))
                }
                Strategy::Rightmost => (0..w.len().saturating_sub(1))
                    .rev()
                    .find(|&p| needs_rewrite(&w[p], &w[p + 1])),
            };
            match pos {
                None => out.add_term(to_key(&w, rank), &c),
                Some(p) => {
                    for (rep, k) in rewrite_pair::<C>(&w[p], &w[p + 1], bc) {
                        next = w[..p].to_vec();
                        next.extend(rep);
                        next.extend_from_slice(&w[p + 2..]);
                        produced.add_term(next, &c.times(&k));
                    }
                }
            }
        }
        pending = produced.terms;
    }
    out
}

impl<C: Coeff> NormalElement<C> {
    pub fn mul(&self, o: &Self, bc: &Bicharacter) -> Self {
        normal_form(&self.to_mixed().mul(&o.to_mixed()), bc, Strategy::Leftmost)
    }
}
