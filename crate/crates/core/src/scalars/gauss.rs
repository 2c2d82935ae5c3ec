use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An element `re + im·√−1` of the Gaussian rationals.
///
/// Both parts are kept in lowest terms with positive denominators, which
/// `BigRational` guarantees after every operation.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn real(re: BigRational) -> Self {
        Self {
            re,
            im: BigRational::zero(),
        }
    }

    /// The chosen square root of −1.
    pub fn i() -> Self {
        Self {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sq();
        Some(Self::new(&self.re / &n, -&self.im / &n))
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Largest absolute value among the numerators and denominators of both parts.
    pub fn height(&self) -> BigInt {
        [
            self.re.numer().abs(),
            self.re.denom().clone(),
            self.im.numer().abs(),
            self.im.denom().clone(),
        ]
        .into_iter()
        .max()
        .unwrap()
    }
}

impl Zero for GaussRational {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRational {
    fn one() -> Self {
        Self::real(BigRational::one())
    }
    fn is_one(&self) -> bool {
        self.im.is_zero() && self.re.is_one()
    }
}

impl<'a> Add<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn add(self, o: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl<'a> Sub<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn sub(self, o: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl<'a> Mul<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn mul(self, o: &GaussRational) -> GaussRational {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussRational::real(&self.re * &o.re);
        }
        GaussRational::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl<'a> Div<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn div(self, o: &GaussRational) -> GaussRational {
        self * &o.inv().expect("division by zero")
    }
}

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-&self.re, -&self.im)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for GaussRational {
            type Output = GaussRational;
            fn $m(self, o: GaussRational) -> GaussRational {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&GaussRational> for GaussRational {
    fn add_assign(&mut self, o: &GaussRational) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&GaussRational> for GaussRational {
    fn sub_assign(&mut self, o: &GaussRational) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl MulAssign<&GaussRational> for GaussRational {
    fn mul_assign(&mut self, o: &GaussRational) {
        *self = &*self * o;
    }
}

impl From<i64> for GaussRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussRational {
    /// Canonical text: `a`, `a/b`, `a/b*i`, `a/b+c/d*i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rat(&self.re));
        }
        let im = fmt_rat(&self.im);
        if self.re.is_zero() {
            return write!(f, "{im}*i");
        }
        if self.im.is_negative() {
            write!(f, "{}{}*i", fmt_rat(&self.re), im)
        } else {
            write!(f, "{}+{}*i", fmt_rat(&self.re), im)
        }
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Debug, thiserror::Error)]
#[error("cannot parse Gaussian rational from {0:?}")]
pub struct ParseGaussError(pub String);

fn parse_rat(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        Some(BigRational::from_integer(s.parse().ok()?))
    }
}

impl FromStr for GaussRational {
    type Err = ParseGaussError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseGaussError(s.to_string());
        let t = s.trim();
        let Some(body) = t.strip_suffix("*i") else {
            return parse_rat(t).map(Self::real).ok_or_else(err);
        };
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        match split {
            Some(k) => {
                let re = parse_rat(&body[..k]).ok_or_else(err)?;
                let im_str = body[k..].trim_start_matches('+');
                let im = parse_rat(im_str).ok_or_else(err)?;
                Ok(Self::new(re, im))
            }
            None => Ok(Self::new(
                BigRational::zero(),
                parse_rat(body).ok_or_else(err)?,
            )),
        }
    }
}

impl Serialize for GaussRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GaussRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussRational::i();
        assert_eq!(&i * &i, GaussRational::from_int(-1));
        assert_eq!(i.pow(4), GaussRational::one());
    }

    #[test]
    fn lowest_terms() {
        let a = GaussRational::from_frac(6, -4);
        assert_eq!(a.to_string(), "-3/2");
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["0", "-3/2", "5*i", "1/2-3/4*i", "-1+2*i"] {
            let g: GaussRational = s.parse().unwrap();
            assert_eq!(g.to_string(), s);
        }
    }

    #[test]
    fn inverse() {
        let a: GaussRational = "1+2*i".parse().unwrap();
        assert_eq!(&a * &a.inv().unwrap(), GaussRational::one());
        assert!(GaussRational::zero().inv().is_none());
    }
}
