use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The pair (τ, n) selecting the algebra sl^(τ)(M|M) with N = 2n.
///
/// Matrix indices are 1-based throughout (`1..=n_prime()`), generator
/// indices run over `0..=n_hat()`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Case {
    pub tau: u8,
    pub n: usize,
}

impl Case {
    pub fn new(tau: u8, n: usize) -> Result<Self> {
        match tau {
            1 | 2 if n >= 2 => Ok(Case { tau, n }),
            4 if n >= 1 => Ok(Case { tau, n }),
            1 | 2 | 4 => Err(Error::BadRank { tau, n }),
            _ => Err(Error::BadTau(tau)),
        }
    }

    /// The six cases exercised by the acceptance suite.
    pub fn test_cases() -> Vec<Case> {
        [(1, 2), (1, 3), (2, 2), (2, 3), (4, 1), (4, 2)]
            .into_iter()
            .map(|(t, n)| Case::new(t, n).unwrap())
            .collect()
    }

    /// N = 2n.
    pub fn big_n(&self) -> usize {
        2 * self.n
    }

    /// N̂: the largest generator index.
    pub fn n_hat(&self) -> usize {
        if self.tau == 1 {
            self.big_n() - 1
        } else {
            self.big_n()
        }
    }

    /// Number of simple roots |I| = N̂ + 1.
    pub fn rank(&self) -> usize {
        self.n_hat() + 1
    }

    /// N′: size of the matrices of the realization.
    pub fn n_prime(&self) -> usize {
        match self.tau {
            1 => self.big_n(),
            2 => 2 * self.big_n(),
            _ => 2 * self.big_n() + 2,
        }
    }

    /// M with sl^(τ)(M|M).
    pub fn m(&self) -> usize {
        match self.tau {
            1 => self.n,
            2 => self.big_n(),
            _ => self.big_n() + 1,
        }
    }

    /// s: the central element has degree s·δ̂.
    pub fn s(&self) -> i64 {
        if self.tau == 4 {
            2
        } else {
            1
        }
    }

    /// Parity p̄ of the matrix index `i ∈ 1..=N′`.
    pub fn pbar(&self, i: usize) -> u8 {
        let n = self.n;
        assert!((1..=self.n_prime()).contains(&i), "index {i} out of range");
        let even = match self.tau {
            1 => i <= n,
            2 => i <= n || i > 3 * n,
            _ => (n + 2..=3 * n + 2).contains(&i),
        };
        u8::from(!even)
    }

    /// Sign d̄_t attached to ε_t, `t ∈ 1..=N`.
    ///
    /// For τ=4 the matrix index carrying ε_t is θ(t) = t + 1.
    pub fn eps_sign(&self, t: usize) -> i64 {
        let idx = if self.tau == 4 { t + 1 } else { t };
        if self.pbar(idx) == 0 {
            1
        } else {
            -1
        }
    }

    /// Parity of the generators E_i, F_i: odd exactly for i = n, and also
    /// for i = 0 when τ = 1.
    pub fn generator_parity(&self, i: usize) -> u8 {
        u8::from(i == self.n || (self.tau == 1 && i == 0))
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tau={} n={}", self.tau, self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_constraints() {
        assert!(Case::new(1, 1).is_err());
        assert!(Case::new(4, 1).is_ok());
        assert!(matches!(Case::new(3, 2), Err(Error::BadTau(3))));
    }

    #[test]
    fn parity_is_balanced() {
        for c in Case::test_cases() {
            let odd = (1..=c.n_prime()).filter(|&i| c.pbar(i) == 1).count();
            assert_eq!(2 * odd, c.n_prime(), "{c}");
            assert_eq!(odd, c.m(), "{c}");
        }
    }
}
