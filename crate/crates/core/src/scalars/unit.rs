use std::fmt;

use serde::{Serialize, Serializer};

use super::{GaussRational, LaurentPoly, Monomial, Var};

/// `±` a Laurent monomial: the invertible elements that bicharacter values
/// and q-bracket coefficients live in.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SignedMonomial {
    pub neg: bool,
    pub mono: Monomial,
}

impl SignedMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn minus_one() -> Self {
        SignedMonomial {
            neg: true,
            mono: Monomial::one(),
        }
    }

    pub fn q_pow(e: i64) -> Self {
        SignedMonomial {
            neg: false,
            mono: Monomial::var_pow(Var::Q, e as i32),
        }
    }

    pub fn var_pow(v: Var, e: i64) -> Self {
        SignedMonomial {
            neg: false,
            mono: Monomial::var_pow(v, e as i32),
        }
    }

    pub fn is_one(&self) -> bool {
        !self.neg && self.mono.is_one()
    }

    pub fn mul(&self, o: &Self) -> Self {
        SignedMonomial {
            neg: self.neg ^ o.neg,
            mono: self.mono.mul(&o.mono),
        }
    }

    pub fn inv(&self) -> Self {
        SignedMonomial {
            neg: self.neg,
            mono: self.mono.inv(),
        }
    }

    pub fn neg(&self) -> Self {
        SignedMonomial {
            neg: !self.neg,
            mono: self.mono.clone(),
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        SignedMonomial {
            neg: self.neg && e.rem_euclid(2) == 1,
            mono: self.mono.pow(e as i32),
        }
    }

    pub fn to_poly(&self) -> LaurentPoly {
        let c = if self.neg {
            GaussRational::from_int(-1)
        } else {
            GaussRational::from_int(1)
        };
        LaurentPoly::term(c, self.mono.clone())
    }

    /// Recover a signed monomial from a single-term polynomial with
    /// coefficient ±1.
    pub fn from_poly(p: &LaurentPoly) -> Option<Self> {
        let (c, mono) = p.as_term()?;
        if c == GaussRational::from_int(1) {
            Some(SignedMonomial { neg: false, mono })
        } else if c == GaussRational::from_int(-1) {
            Some(SignedMonomial { neg: true, mono })
        } else {
            None
        }
    }

    /// Replace variables by signed monomials.
    pub fn substitute(&self, f: &dyn Fn(Var) -> SignedMonomial) -> SignedMonomial {
        let mut out = SignedMonomial {
            neg: self.neg,
            mono: Monomial::one(),
        };
        for &(v, e) in self.mono.pairs() {
            out = out.mul(&f(v).pow(e as i64));
        }
        out
    }
}

impl fmt::Display for SignedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.neg { "-" } else { "" };
        if self.mono.is_one() {
            write!(f, "{sign}1")
        } else {
            write!(f, "{sign}{}", self.mono)
        }
    }
}

impl Serialize for SignedMonomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Debug for SignedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<&SignedMonomial> for LaurentPoly {
    fn from(u: &SignedMonomial) -> Self {
        u.to_poly()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Ring;

    #[test]
    fn pow_and_inverse() {
        let a = SignedMonomial::q_pow(2).neg();
        assert!(a.mul(&a.inv()).is_one());
        assert_eq!(a.pow(2), SignedMonomial::q_pow(4));
        assert_eq!(a.pow(-1), a.inv());
        assert!(a.to_poly().times(&a.inv().to_poly()).is_one());
    }
}
