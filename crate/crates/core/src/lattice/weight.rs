use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// An element of V̂ = (⊕ ℤα_i) ⊕ ℤ∂, stored in the α-basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub alpha: Vec<i64>,
    pub d: i64,
}

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight {
            alpha: vec![0; rank],
            d: 0,
        }
    }

    /// The simple root α_i.
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.alpha[i] = 1;
        w
    }

    /// The element ∂.
    pub fn partial(rank: usize) -> Self {
        Weight {
            alpha: vec![0; rank],
            d: 1,
        }
    }

    pub fn from_alpha(alpha: Vec<i64>) -> Self {
        Weight { alpha, d: 0 }
    }

    pub fn rank(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_zero(&self) -> bool {
        self.d == 0 && self.alpha.iter().all(|&c| c == 0)
    }

    /// In the positive cone ⊕ ℤ≥0 α_i.
    pub fn is_nonneg(&self) -> bool {
        self.d == 0 && self.alpha.iter().all(|&c| c >= 0)
    }

    /// Sum of α-coefficients.
    pub fn height(&self) -> i64 {
        self.alpha.iter().sum()
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight {
            alpha: self.alpha.iter().map(|c| c * k).collect(),
            d: self.d * k,
        }
    }

    /// Componentwise `self ≤ other` on α-coefficients (and equal ∂ parts).
    pub fn le(&self, other: &Weight) -> bool {
        self.d == other.d && self.alpha.iter().zip(&other.alpha).all(|(a, b)| a <= b)
    }

    pub fn plus_simple(&self, i: usize, k: i64) -> Weight {
        let mut w = self.clone();
        w.alpha[i] += k;
        w
    }

    /// All weights `μ` in the positive cone with `μ ≤ self` componentwise.
    pub fn lower_set(&self) -> Vec<Weight> {
        let mut out = vec![Weight::zero(self.rank())];
        for (i, &c) in self.alpha.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * (c.max(0) as usize + 1));
            for w in &out {
                for k in 0..=c.max(0) {
                    next.push(w.plus_simple(i, k));
                }
            }
            out = next;
        }
        out
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        Weight {
            alpha: self
                .alpha
                .iter()
                .zip(&o.alpha)
                .map(|(a, b)| a + b)
                .collect(),
            d: self.d + o.d,
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        Weight {
            alpha: self
                .alpha
                .iter()
                .zip(&o.alpha)
                .map(|(a, b)| a - b)
                .collect(),
            d: self.d - o.d,
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scale(-1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.alpha.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        if self.d != 0 {
            write!(f, ";d={}", self.d)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A weight written in the basis ε_1..ε_N, δ̂, ∂.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct EpsWeight {
    pub eps: Vec<i64>,
    pub delta: i64,
    pub d: i64,
}

impl EpsWeight {
    pub fn zero(big_n: usize) -> Self {
        EpsWeight {
            eps: vec![0; big_n],
            delta: 0,
            d: 0,
        }
    }

    /// ε_t with 1-based `t`.
    pub fn eps(big_n: usize, t: usize) -> Self {
        let mut w = Self::zero(big_n);
        w.eps[t - 1] = 1;
        w
    }

    pub fn delta(big_n: usize) -> Self {
        EpsWeight {
            delta: 1,
            ..Self::zero(big_n)
        }
    }

    pub fn add(&self, o: &EpsWeight) -> EpsWeight {
        EpsWeight {
            eps: self.eps.iter().zip(&o.eps).map(|(a, b)| a + b).collect(),
            delta: self.delta + o.delta,
            d: self.d + o.d,
        }
    }

    pub fn scale(&self, k: i64) -> EpsWeight {
        EpsWeight {
            eps: self.eps.iter().map(|a| a * k).collect(),
            delta: self.delta * k,
            d: self.d * k,
        }
    }

    pub fn sub(&self, o: &EpsWeight) -> EpsWeight {
        self.add(&o.scale(-1))
    }
}

impl fmt::Display for EpsWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut push = |c: i64, name: String| {
            if c == 0 {
                return;
            }
            let body = match c {
                1 => name,
                -1 => format!("-{name}"),
                _ => format!("{c}{name}"),
            };
            parts.push(body);
        };
        push(self.delta, "delta".into());
        for (t, &c) in self.eps.iter().enumerate() {
            push(c, format!("eps{}", t + 1));
        }
        push(self.d, "d".into());
        if parts.is_empty() {
            return write!(f, "0");
        }
        let mut s = parts[0].clone();
        for p in &parts[1..] {
            if let Some(rest) = p.strip_prefix('-') {
                s += &format!(" - {rest}");
            } else {
                s += &format!(" + {p}");
            }
        }
        write!(f, "{s}")
    }
}
