use std::collections::BTreeMap;

use crate::lattice::{Bicharacter, Weight};
use crate::scalars::Ring;

use super::free::Coeff;
use super::mixed::{
    normal_form, Letter, MixedElement, MixedWord, NormalElement, NormalKey, Strategy,
};

/// A finite sum of pure tensors of words, Σ c · (u ⊗ v).
#[derive(Clone, PartialEq, Debug)]
pub struct Tensor<C> {
    terms: BTreeMap<(MixedWord, MixedWord), C>,
}

impl<C: Ring> Tensor<C> {
    pub fn zero() -> Self {
        Tensor {
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, u: MixedWord, v: MixedWord, c: &C) {
        if c.is_zero() {
            return;
        }
        let key = (u, v);
        let e = self.terms.entry(key.clone()).or_insert_with(C::zero);
        e.plus_assign(c);
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(MixedWord, MixedWord), &C)> {
        self.terms.iter()
    }

    /// Componentwise product (a⊗b)(c⊗d) = ac⊗bd, with no Koszul sign.
    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &o.terms {
                let mut u = a.clone();
                u.extend(c.iter().cloned());
                let mut v = b.clone();
                v.extend(d.iter().cloned());
                r.add_term(u, v, &x.times(y));
            }
        }
        r
    }
}

/// A tensor with both legs in the triangular basis.
pub type NormalTensor<C> = BTreeMap<(NormalKey, NormalKey), C>;

impl<C: Coeff> Tensor<C> {
    pub fn normalize(&self, bc: &Bicharacter) -> NormalTensor<C> {
        let mut out: NormalTensor<C> = BTreeMap::new();
        for ((u, v), c) in &self.terms {
            let nu = normal_form(
                &MixedElement::from_word(u.clone(), C::one()),
                bc,
                Strategy::Leftmost,
            );
            let nv = normal_form(
                &MixedElement::from_word(v.clone(), C::one()),
                bc,
                Strategy::Leftmost,
            );
            for (ku, cu) in nu.terms() {
                for (kv, cv) in nv.terms() {
                    let e = out.entry((ku.clone(), kv.clone())).or_insert_with(C::zero);
                    e.plus_assign(&c.times(&cu.times(cv)));
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

fn letter_coproduct<C: Ring>(l: &Letter, rank: usize) -> Tensor<C> {
    let mut t = Tensor::zero();
    let z = Weight::zero(rank);
    match l {
        Letter::E(i) => {
            t.add_term(vec![l.clone()], vec![], &C::one());
            let k = Letter::G(Weight::simple(rank, *i as usize), z);
            t.add_term(vec![k], vec![l.clone()], &C::one());
        }
        Letter::F(i) => {
            let lw = Letter::G(z, Weight::simple(rank, *i as usize));
            t.add_term(vec![l.clone()], vec![lw], &C::one());
            t.add_term(vec![], vec![l.clone()], &C::one());
        }
        Letter::G(..) => t.add_term(vec![l.clone()], vec![l.clone()], &C::one()),
    }
    t
}

/// Δ(E_i) = E_i⊗1 + K_{α_i}⊗E_i, Δ(F_i) = F_i⊗L_{α_i} + 1⊗F_i,
/// Δ(K_a) = K_a⊗K_a, Δ(L_a) = L_a⊗L_a, extended multiplicatively.
pub fn coproduct<C: Coeff>(x: &MixedElement<C>, bc: &Bicharacter) -> NormalTensor<C> {
    let rank = bc.rank();
    let mut total = Tensor::zero();
    for (w, c) in x.terms() {
        let mut acc = Tensor::zero();
        acc.add_term(vec![], vec![], c);
        for l in w {
            acc = acc.mul(&letter_coproduct(l, rank));
        }
        for ((u, v), k) in acc.terms {
            total.add_term(u, v, &k);
        }
    }
    total.normalize(bc)
}

fn letter_antipode<C: Ring>(l: &Letter, rank: usize) -> MixedElement<C> {
    let z = Weight::zero(rank);
    match l {
        Letter::E(i) => {
            let k = Letter::G(-&Weight::simple(rank, *i as usize), z);
            MixedElement::from_word(vec![k, l.clone()], C::from_int(-1))
        }
        Letter::F(i) => {
            let lw = Letter::G(z, -&Weight::simple(rank, *i as usize));
            MixedElement::from_word(vec![l.clone(), lw], C::from_int(-1))
        }
        Letter::G(a, b) => MixedElement::from_word(vec![Letter::G(-a, -b)], C::one()),
    }
}

/// S(E_i) = −K_{α_i}⁻¹E_i, S(F_i) = −F_iL_{α_i}⁻¹, S(K_a) = K_a⁻¹,
/// S(L_a) = L_a⁻¹, extended as an algebra antihomomorphism.
pub fn antipode<C: Coeff>(x: &MixedElement<C>, bc: &Bicharacter) -> NormalElement<C> {
    let rank = bc.rank();
    let mut total = MixedElement::zero();
    for (w, c) in x.terms() {
        let mut acc = MixedElement::from_word(vec![], c.clone());
        for l in w.iter().rev() {
            acc = acc.mul(&letter_antipode(l, rank));
        }
        total = total.plus(&acc);
    }
    normal_form(&total, bc, Strategy::Leftmost)
}

/// ε(E_i) = ε(F_i) = 0, ε(K_a) = ε(L_a) = 1.
pub fn counit<C: Ring>(x: &MixedElement<C>) -> C {
    let mut total = C::zero();
    for (w, c) in x.terms() {
        if w.iter().all(|l| matches!(l, Letter::G(..))) {
            total.plus_assign(c);
        }
    }
    total
}

/// (ε ⊗ id)(t) and (id ⊗ ε)(t) of a normalized tensor.
pub fn counit_left<C: Coeff>(t: &NormalTensor<C>, bc: &Bicharacter) -> NormalElement<C> {
    let mut m = MixedElement::zero();
    for ((u, v), c) in t {
        if u.e.is_empty() && u.f.is_empty() {
            m.add_term(v.to_word(), c);
        }
    }
    normal_form(&m, bc, Strategy::Leftmost)
}

pub fn counit_right<C: Coeff>(t: &NormalTensor<C>, bc: &Bicharacter) -> NormalElement<C> {
    let mut m = MixedElement::zero();
    for ((u, v), c) in t {
        if v.e.is_empty() && v.f.is_empty() {
            m.add_term(u.to_word(), c);
        }
    }
    normal_form(&m, bc, Strategy::Leftmost)
}

/// m ∘ (S ⊗ id) ∘ Δ.
pub fn antipode_convolution<C: Coeff>(x: &MixedElement<C>, bc: &Bicharacter) -> NormalElement<C> {
    let mut total = MixedElement::zero();
    for ((u, v), c) in coproduct(x, bc) {
        let su = antipode(&MixedElement::from_word(u.to_word(), C::one()), bc).to_mixed();
        total = total.plus(&su.mul(&MixedElement::from_word(v.to_word(), c)));
    }
    normal_form(&total, bc, Strategy::Leftmost)
}
