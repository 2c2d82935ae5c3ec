use std::fmt;

use serde::{Deserialize, Serialize};

use super::field::{Field, Ring};
use super::laurent::{LaurentPoly, UniPoly};
use super::{GaussRational, Monomial};

/// A fraction of Laurent polynomials.
///
/// Normal form: the denominator is an ordinary polynomial without monomial
/// factors whose leading coefficient is 1. When the denominator involves a
/// single variable, common factors with the numerator are cancelled, which
/// makes the representation canonical in the univariate case. Equality is
/// decided by cross-multiplication and so never depends on normalization.
#[derive(Clone, Serialize, Deserialize)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_empty(), "zero denominator");
        let mut r = RatFunc { num, den };
        r.normalize();
        r
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFunc {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn constant(c: GaussRational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    /// The numerator when the denominator is 1.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    fn normalize(&mut self) {
        if self.num.is_empty() {
            self.den = LaurentPoly::one();
            return;
        }
        let m = self.den.min_monomial().inv();
        if !m.is_one() {
            self.den = self.den.mul_monomial(&m);
            self.num = self.num.mul_monomial(&m);
        }
        if let Some((c, mono)) = self.den.as_term() {
            debug_assert!(mono.is_one());
            let ci = c.inv().unwrap();
            self.num = self.num.scale(&ci);
            self.den = LaurentPoly::one();
            return;
        }
        let vars = self.den.vars();
        if vars.len() == 1 {
            let v = vars[0];
            let (d, _) = self.den.to_univariate(v).unwrap();
            let mut g = d.clone();
            for (_, slice) in self.num.split_by_rest(v) {
                if g.degree() == Some(0) {
                    break;
                }
                g = g.gcd(&slice);
            }
            if g.degree().unwrap_or(0) > 0 {
                self.num = self
                    .num
                    .div_univariate(&g, v)
                    .expect("gcd divides numerator");
                let (dq, r) = d.div_rem(&g);
                debug_assert!(r.is_zero());
                self.den = LaurentPoly::from_univariate(&dq, v, 0);
            }
        }
        let lc = self.den.leading().unwrap().1.inv().unwrap();
        if !lc.is_one() {
            self.num = self.num.scale(&lc);
            self.den = self.den.scale(&lc);
        }
    }

    pub fn eval(
        &self,
        assign: &dyn Fn(super::Var) -> Option<GaussRational>,
    ) -> crate::Result<GaussRational> {
        let d = self.den.eval(assign)?;
        let n = self.num.eval(assign)?;
        d.inv()
            .map(|di| &n * &di)
            .ok_or(crate::Error::DenominatorVanishes)
    }
}

impl LaurentPoly {
    /// Univariate slices in `v` grouped by the monomial in the other variables,
    /// each shifted to start at degree 0.
    pub(crate) fn split_by_rest(&self, v: super::Var) -> Vec<(Monomial, UniPoly)> {
        let mut groups: std::collections::BTreeMap<Monomial, Vec<(i32, GaussRational)>> =
            Default::default();
        for (m, c) in self.terms() {
            groups
                .entry(m.without(v))
                .or_default()
                .push((m.exponent(v), c.clone()));
        }
        groups
            .into_iter()
            .map(|(rest, cs)| {
                let lo = cs.iter().map(|x| x.0).min().unwrap();
                (
                    rest,
                    UniPoly::from_sparse(cs.into_iter().map(|(e, c)| ((e - lo) as usize, c))),
                )
            })
            .collect()
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, o: &Self) -> bool {
        if self.den == o.den {
            return self.num == o.num;
        }
        self.num.times(&o.den) == o.num.times(&self.den)
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_empty()
    }
    fn plus(&self, o: &Self) -> Self {
        if self.den == o.den {
            return RatFunc::new(self.num.plus(&o.num), self.den.clone());
        }
        RatFunc::new(
            self.num.times(&o.den).plus(&o.num.times(&self.den)),
            self.den.times(&o.den),
        )
    }
    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negated())
    }
    fn times(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Self::from_poly(self.num.times(&o.num));
        }
        RatFunc::new(self.num.times(&o.num), self.den.times(&o.den))
    }
    fn negated(&self) -> Self {
        RatFunc {
            num: self.num.negated(),
            den: self.den.clone(),
        }
    }
    fn from_int(n: i64) -> Self {
        Self::from_poly(LaurentPoly::int(n))
    }
}

impl Field for RatFunc {
    fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        RatFunc::new(self.den.clone(), self.num.clone())
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Var;

    fn rq(p: LaurentPoly) -> RatFunc {
        RatFunc::from_poly(p)
    }

    #[test]
    fn cancels_univariate_common_factor() {
        let a = rq(LaurentPoly::q_diff(2));
        let b = rq(LaurentPoly::q_diff(1));
        let c = a.divided(&b);
        assert_eq!(
            c.as_poly(),
            Some(&LaurentPoly::q_pow(1).plus(&LaurentPoly::q_pow(-1)))
        );
    }

    #[test]
    fn equal_fractions_compare_equal() {
        let x = LaurentPoly::var(Var::X(0));
        let y = LaurentPoly::var(Var::X(1));
        let s = x.plus(&y);
        let a = RatFunc::new(x.times(&s), y.times(&s));
        let b = RatFunc::new(x.clone(), y.clone());
        assert_eq!(a, b);
    }

    #[test]
    fn field_inverse() {
        let a = rq(LaurentPoly::q_diff(3).plus(&LaurentPoly::int(2)));
        assert!(a.times(&a.inverse()).is_one());
    }
}
