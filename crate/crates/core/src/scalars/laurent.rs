use std::collections::BTreeMap;
use std::fmt;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::field::{Field, Ring};
use super::{GaussRational, Monomial, Var};
use crate::error::{Error, Result};

/// Sparse multivariate Laurent polynomial over the Gaussian rationals.
///
/// Terms are kept in a `BTreeMap` ordered by the graded-lex monomial order;
/// zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, GaussRational>,
}

impl LaurentPoly {
    pub fn constant(c: GaussRational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(GaussRational::from_int(n))
    }

    pub fn term(c: GaussRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !Ring::is_zero(&c) {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(GaussRational::one(), m)
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v))
    }

    pub fn var_pow(v: Var, e: i32) -> Self {
        Self::monomial(Monomial::var_pow(v, e))
    }

    /// `q^e`
    pub fn q_pow(e: i32) -> Self {
        Self::var_pow(Var::Q, e)
    }

    /// `q^k − q^{−k}`
    pub fn q_diff(k: i32) -> Self {
        Self::q_pow(k).minus(&Self::q_pow(-k))
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, GaussRational)>) -> Self {
        let mut p = Self::default();
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &GaussRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: &GaussRational) {
        if Ring::is_zero(c) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if Ring::is_zero(e.get()) {
                    e.remove();
                }
            }
        }
    }

    /// Largest term under the graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &GaussRational)> {
        self.terms.iter().next_back()
    }

    pub fn as_constant(&self) -> Option<GaussRational> {
        match self.terms.len() {
            0 => Some(GaussRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// `Some((c, m))` when the polynomial is a single term.
    pub fn as_term(&self) -> Option<(GaussRational, Monomial)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        Some((c.clone(), m.clone()))
    }

    /// Inverse of a single-term polynomial (a unit of the Laurent ring).
    pub fn unit_inverse(&self) -> Option<LaurentPoly> {
        let (c, m) = self.as_term()?;
        Some(Self::term(c.inv()?, m.inv()))
    }

    pub fn scale(&self, c: &GaussRational) -> LaurentPoly {
        if Ring::is_zero(c) {
            return Self::default();
        }
        Self {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> LaurentPoly {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(mono), a.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: i64) -> LaurentPoly {
        if e < 0 {
            return self
                .unit_inverse()
                .expect("negative power of a non-unit")
                .pow(-e);
        }
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.times(self);
        }
        acc
    }

    /// Variables occurring with a nonzero exponent in some term.
    pub fn vars(&self) -> Vec<Var> {
        let mut v: Vec<Var> = self.terms.keys().flat_map(|m| m.vars()).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_monomial(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one();
        };
        it.fold(first.clone(), |acc, m| acc.gcd(m))
    }

    /// Decompose as `Σ_k coeff_k · v^k` with coefficients free of `v`.
    pub fn split_by(&self, v: Var) -> BTreeMap<i32, LaurentPoly> {
        let mut out: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.exponent(v))
                .or_default()
                .add_term(m.without(v), c);
        }
        out
    }

    /// Exact substitution value. Variables missing from `assign` are an error.
    pub fn eval(&self, assign: &dyn Fn(Var) -> Option<GaussRational>) -> Result<GaussRational> {
        let mut cache: FxHashMap<Var, GaussRational> = FxHashMap::default();
        let mut total = GaussRational::zero();
        for (m, c) in &self.terms {
            let mut val = c.clone();
            for &(v, e) in m.pairs() {
                let x = match cache.get(&v) {
                    Some(x) => x.clone(),
                    None => {
                        let x = assign(v).ok_or(Error::UnassignedVariable(v))?;
                        cache.insert(v, x.clone());
                        x
                    }
                };
                if Ring::is_zero(&x) && e < 0 {
                    return Err(Error::ZeroAssignment(v));
                }
                val = &val * &x.pow(e as i64);
            }
            total += &val;
        }
        Ok(total)
    }

    /// Evaluate into an arbitrary field given images of the variables and of
    /// the Gaussian-rational coefficients.
    pub fn eval_in<F: Field>(
        &self,
        coeff: &dyn Fn(&GaussRational) -> Option<F>,
        var: &dyn Fn(Var) -> F,
    ) -> Option<F> {
        let mut total = F::zero();
        for (m, c) in &self.terms {
            let mut val = coeff(c)?;
            for &(v, e) in m.pairs() {
                let x = var(v);
                let xe = if e >= 0 {
                    pow_field(&x, e as u32)
                } else {
                    if x.is_zero() {
                        return None;
                    }
                    pow_field(&x.inverse(), (-e) as u32)
                };
                val = val.times(&xe);
            }
            total.plus_assign(&val);
        }
        Some(total)
    }

    /// Replace each variable by a Laurent polynomial (units where inverted).
    pub fn substitute(&self, f: &dyn Fn(Var) -> LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let mut val = LaurentPoly::constant(c.clone());
            for &(v, e) in m.pairs() {
                val = val.times(&f(v).pow(e as i64));
            }
            out.plus_assign(&val);
        }
        out
    }

    /// Multiply every coefficient by the monomial `q^{k·e_t}` where `e_t` is the
    /// exponent of `t` in the term (used for the grading operator `q^{deg_t}`).
    pub fn twist_t(&self, shift: i32) -> LaurentPoly {
        if shift == 0 {
            return self.clone();
        }
        LaurentPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let e = m.exponent(Var::T);
            (m.mul(&Monomial::var_pow(Var::Q, shift * e)), c.clone())
        }))
    }

    /// Exact division by a polynomial in a single variable, coefficientwise in
    /// the remaining variables. `None` if not exact.
    pub fn div_univariate(&self, d: &UniPoly, v: Var) -> Option<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        // group by the monomial in the other variables
        let mut groups: BTreeMap<Monomial, BTreeMap<i32, GaussRational>> = BTreeMap::new();
        for (m, c) in &self.terms {
            groups
                .entry(m.without(v))
                .or_default()
                .insert(m.exponent(v), c.clone());
        }
        for (rest, coeffs) in groups {
            let lo = *coeffs.keys().next().unwrap();
            let u =
                UniPoly::from_sparse(coeffs.iter().map(|(&e, c)| ((e - lo) as usize, c.clone())));
            let (qt, r) = u.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            for (k, c) in qt.coeffs.iter().enumerate() {
                out.add_term(rest.mul(&Monomial::var_pow(v, k as i32 + lo)), c);
            }
        }
        Some(out)
    }

    /// The polynomial as a dense univariate polynomial in `v`, after
    /// dividing out the lowest power; `None` if another variable occurs.
    pub fn to_univariate(&self, v: Var) -> Option<(UniPoly, i32)> {
        if self.terms.keys().any(|m| m.vars().any(|w| w != v)) {
            return None;
        }
        let lo = self.terms.keys().map(|m| m.exponent(v)).min().unwrap_or(0);
        Some((
            UniPoly::from_sparse(
                self.terms
                    .iter()
                    .map(|(m, c)| ((m.exponent(v) - lo) as usize, c.clone())),
            ),
            lo,
        ))
    }

    pub fn from_univariate(u: &UniPoly, v: Var, shift: i32) -> LaurentPoly {
        LaurentPoly::from_terms(
            u.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (Monomial::var_pow(v, k as i32 + shift), c.clone())),
        )
    }

    /// Coefficients of all terms, in term order.
    pub fn coefficients(&self) -> impl Iterator<Item = &GaussRational> {
        self.terms.values()
    }
}

fn pow_field<F: Field>(x: &F, e: u32) -> F {
    let mut acc = F::one();
    let mut base = x.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.times(&base);
        }
        base = base.times(&base);
        e >>= 1;
    }
    acc
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::int(1)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.plus_assign(o);
        r
    }
    fn plus_assign(&mut self, o: &Self) {
        for (m, c) in &o.terms {
            self.add_term(m.clone(), c);
        }
    }
    fn minus(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), &-c);
        }
        r
    }
    fn times(&self, o: &Self) -> Self {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_one() {
                return o.scale(c);
            }
        }
        if o.terms.len() == 1 {
            let (m, c) = o.terms.iter().next().unwrap();
            if m.is_one() {
                return self.scale(c);
            }
        }
        let mut acc: FxHashMap<Monomial, GaussRational> = FxHashMap::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(x) => *x += &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Self {
            terms: acc.into_iter().filter(|(_, c)| !Ring::is_zero(c)).collect(),
        }
    }
    fn negated(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
    fn from_int(n: i64) -> Self {
        Self::int(n)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let cs = c.to_string();
            let body = if m.is_one() {
                cs
            } else if c.is_one() {
                m.to_string()
            } else if *c == -GaussRational::one() {
                format!("-{m}")
            } else if c.is_real() {
                format!("{cs}*{m}")
            } else {
                format!("({cs})*{m}")
            };
            if first {
                write!(f, "{body}")?;
            } else if let Some(rest) = body.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {body}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// JSON form: a list of `[coefficient, [[variable, exponent], ...]]` terms.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in self.terms.iter().rev() {
            let mono: Vec<(String, i32)> =
                m.pairs().iter().map(|&(v, e)| (v.to_string(), e)).collect();
            seq.serialize_element(&(c.to_string(), mono))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<(String, Vec<(String, i32)>)> = Vec::deserialize(d)?;
        let mut p = LaurentPoly::zero();
        for (c, mono) in raw {
            let c: GaussRational = c.parse().map_err(serde::de::Error::custom)?;
            let mut pairs = Vec::new();
            for (v, e) in mono {
                pairs.push((v.parse::<Var>().map_err(serde::de::Error::custom)?, e));
            }
            p.add_term(Monomial::from_pairs(pairs), &c);
        }
        Ok(p)
    }
}

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct UniPoly {
    pub coeffs: Vec<GaussRational>,
}

impl UniPoly {
    pub fn from_sparse(it: impl IntoIterator<Item = (usize, GaussRational)>) -> Self {
        let mut coeffs: Vec<GaussRational> = Vec::new();
        for (k, c) in it {
            if coeffs.len() <= k {
                coeffs.resize(k + 1, GaussRational::zero());
            }
            coeffs[k] += &c;
        }
        let mut u = UniPoly { coeffs };
        u.trim();
        u
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Ring::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn monic(&self) -> UniPoly {
        let lc = self.coeffs.last().expect("monic of zero").inv().unwrap();
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c * &lc).collect(),
        }
    }

    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (UniPoly::default(), self.clone());
        }
        let lc_inv = d.coeffs[dd].inv().unwrap();
        let mut q = vec![GaussRational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &lc_inv;
            if Ring::is_zero(&c) {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &c * dc;
                r[k + j] -= &t;
            }
            q[k] = c;
        }
        r.truncate(dd);
        let mut qq = UniPoly { coeffs: q };
        qq.trim();
        let mut rr = UniPoly { coeffs: r };
        rr.trim();
        (qq, rr)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = if r.is_zero() { r } else { r.monic() };
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> LaurentPoly {
        LaurentPoly::var(Var::Q)
    }

    #[test]
    fn q_times_q_inverse() {
        assert_eq!(q().times(&LaurentPoly::q_pow(-1)), LaurentPoly::one());
    }

    #[test]
    fn difference_of_squares() {
        let a = q().minus(&LaurentPoly::q_pow(-1));
        let b = q().plus(&LaurentPoly::q_pow(-1));
        assert_eq!(a.times(&b), LaurentPoly::q_diff(2));
    }

    #[test]
    fn additive_inverse_is_empty() {
        let x = LaurentPoly::var(Var::X(0));
        assert!(x.plus(&x.negated()).is_empty());
    }

    #[test]
    fn eval_examples() {
        let a = q().minus(&LaurentPoly::q_pow(-1));
        let at2 = |v: Var| (v == Var::Q).then(|| GaussRational::from_int(2));
        assert_eq!(a.eval(&at2).unwrap(), GaussRational::from_frac(3, 2));
        assert_eq!(
            LaurentPoly::int(7).eval(&|_| None).unwrap(),
            GaussRational::from_int(7)
        );
        let b = q().times(&LaurentPoly::var(Var::P(0, 1)));
        let assign = |v: Var| match v {
            Var::Q => Some(GaussRational::from_int(2)),
            Var::P(0, 1) => Some(GaussRational::from_frac(-1, 3)),
            _ => None,
        };
        assert_eq!(b.eval(&assign).unwrap(), GaussRational::from_frac(-2, 3));
    }

    #[test]
    fn eval_zero_assignment_error() {
        let a = LaurentPoly::q_pow(-1);
        let r = a.eval(&|_| Some(GaussRational::zero()));
        assert!(matches!(r, Err(Error::ZeroAssignment(Var::Q))));
    }

    #[test]
    fn univariate_gcd() {
        let (a, _) = LaurentPoly::q_diff(2)
            .times(&LaurentPoly::q_pow(2))
            .to_univariate(Var::Q)
            .unwrap();
        let (b, _) = q()
            .minus(&LaurentPoly::q_pow(-1))
            .times(&q())
            .to_univariate(Var::Q)
            .unwrap();
        // q^4 − 1 and q^2 − 1
        let g = a.gcd(&b);
        assert_eq!(g.degree(), Some(2));
    }

    #[test]
    fn json_roundtrip() {
        let p = q().plus(&LaurentPoly::var(Var::P(0, 2)).scale(&GaussRational::from_frac(-3, 4)));
        let s = serde_json::to_string(&p).unwrap();
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(p, back);
    }
}
