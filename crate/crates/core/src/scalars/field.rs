use std::fmt;

use num_traits::{One, Zero};

use super::GaussRational;

/// Commutative ring operations shared by every coefficient domain.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    fn from_int(n: i64) -> Self;

    fn plus_assign(&mut self, o: &Self) {
        *self = self.plus(o);
    }

    /// `self += a * b`
    fn fma(&mut self, a: &Self, b: &Self) {
        self.plus_assign(&a.times(b));
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    /// Panics on zero.
    fn inverse(&self) -> Self;

    fn divided(&self, o: &Self) -> Self {
        self.times(&o.inverse())
    }
}

impl Ring for GaussRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_int(n: i64) -> Self {
        GaussRational::from_int(n)
    }
    fn plus_assign(&mut self, o: &Self) {
        *self += o;
    }
}

impl Field for GaussRational {
    fn inverse(&self) -> Self {
        self.inv().expect("inverse of zero")
    }
}

/// The prime 2^61 − 1.
pub const FP_MODULUS: u64 = (1u64 << 61) - 1;

/// Residues modulo the Mersenne prime 2^61 − 1.
///
/// Used for fast structural computations (pivot discovery, ranks at random
/// points); never as the sole basis of an exact verdict.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp(pub u64);

impl Fp {
    pub fn new(v: u64) -> Self {
        Fp(v % FP_MODULUS)
    }

    pub fn from_i128(v: i128) -> Self {
        let m = FP_MODULUS as i128;
        Fp((((v % m) + m) % m) as u64)
    }

    #[inline]
    fn reduce(x: u128) -> u64 {
        let lo = (x as u64) & FP_MODULUS;
        let hi = (x >> 61) as u64;
        let mut s = lo + (hi & FP_MODULUS) + (hi >> 61);
        while s >= FP_MODULUS {
            s -= FP_MODULUS;
        }
        s
    }

    pub fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            base = base.times(&base);
            e >>= 1;
        }
        acc
    }

    pub fn pow_i(self, e: i64) -> Fp {
        if e >= 0 {
            self.pow(e as u64)
        } else {
            self.inverse().pow(e.unsigned_abs())
        }
    }

    /// Image of a rational `num/den`; `None` when `den ≡ 0`.
    pub fn from_frac(num: i128, den: i128) -> Option<Fp> {
        let d = Fp::from_i128(den);
        if d.0 == 0 {
            None
        } else {
            Some(Fp::from_i128(num).times(&d.inverse()))
        }
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Ring for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    #[inline]
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    #[inline]
    fn plus(&self, o: &Self) -> Self {
        let s = self.0 + o.0;
        Fp(if s >= FP_MODULUS { s - FP_MODULUS } else { s })
    }
    #[inline]
    fn minus(&self, o: &Self) -> Self {
        Fp(if self.0 >= o.0 {
            self.0 - o.0
        } else {
            self.0 + FP_MODULUS - o.0
        })
    }
    #[inline]
    fn times(&self, o: &Self) -> Self {
        Fp(Self::reduce(self.0 as u128 * o.0 as u128))
    }
    fn negated(&self) -> Self {
        Fp(if self.0 == 0 { 0 } else { FP_MODULUS - self.0 })
    }
    fn from_int(n: i64) -> Self {
        Fp::from_i128(n as i128)
    }
}

impl Field for Fp {
    fn inverse(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero mod p");
        self.pow(FP_MODULUS - 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_inverse() {
        for v in [1u64, 2, 3, 12345678901234, FP_MODULUS - 1] {
            let a = Fp::new(v);
            assert_eq!(a.times(&a.inverse()), Fp(1));
        }
    }

    #[test]
    fn fp_reduce_edge() {
        let a = Fp(FP_MODULUS - 1);
        assert_eq!(a.times(&a), Fp(1));
        assert_eq!(a.plus(&Fp(1)), Fp(0));
        assert_eq!(Fp::from_int(-1), a);
    }
}

impl Fp {
    fn from_bigint(v: &num_bigint::BigInt) -> Fp {
        use num_traits::ToPrimitive;
        let m = num_bigint::BigInt::from(FP_MODULUS);
        let r = ((v % &m) + &m) % &m;
        Fp(r.to_u64().expect("residue fits"))
    }

    /// Image of a real Gaussian rational; `None` for nonreal values or a
    /// denominator divisible by the modulus.
    pub fn from_gauss(c: &GaussRational) -> Option<Fp> {
        if !c.is_real() {
            return None;
        }
        let d = Fp::from_bigint(c.re.denom());
        if d.0 == 0 {
            return None;
        }
        Some(Fp::from_bigint(c.re.numer()).times(&d.inverse()))
    }
}
