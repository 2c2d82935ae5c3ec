use serde::Serialize;

use crate::case::Case;
use crate::error::{Error, Result};

/// A parity assignment p̄ on matrix indices `1..=size`, with the sign maps
/// used by the automorphisms.
#[derive(Clone, Debug, Serialize)]
pub struct ParityMap {
    parity: Vec<u8>,
}

impl ParityMap {
    pub fn new(parity: Vec<u8>) -> Self {
        ParityMap { parity }
    }

    pub fn for_case(case: Case) -> Self {
        ParityMap::new((1..=case.n_prime()).map(|i| case.pbar(i)).collect())
    }

    pub fn size(&self) -> usize {
        self.parity.len()
    }

    /// p̄(i), 1-based.
    pub fn p(&self, i: usize) -> u8 {
        self.parity[i - 1]
    }

    /// (−1)^{p̄(i)}.
    pub fn sign(&self, i: usize) -> i64 {
        1 - 2 * i64::from(self.p(i))
    }

    /// γ_x(i) = x + 1 − i.
    pub fn gamma(x: usize, i: usize) -> usize {
        x + 1 - i
    }

    /// Sign map g with g(i)g(γ(i)) = (−1)^{p̄(i)} and g = 1 on the lower half;
    /// requires p̄ ∘ γ = p̄ on `1..=size`.
    pub fn g(&self) -> Result<Vec<i64>> {
        let n = self.size();
        for i in 1..=n {
            if self.p(i) != self.p(Self::gamma(n, i)) {
                return Err(Error::SymmetryViolation(format!(
                    "p({i}) != p({})",
                    Self::gamma(n, i)
                )));
            }
        }
        let mut g = vec![1i64; n + 1];
        for i in 1..=n {
            let j = Self::gamma(n, i);
            if j > i {
                g[j] = self.sign(i);
            }
        }
        Ok(g)
    }

    /// Sign map g′ on `1..=size−1` for the order-4 automorphism: indices are
    /// shifted by θ(i) = i + 1, mirrored by γ_{size−1}, and p̄(θ(0)) must be 1.
    pub fn g_prime(&self) -> Result<Vec<i64>> {
        let n = self.size();
        if self.p(1) != 1 {
            return Err(Error::SymmetryViolation("p(theta(0)) must be 1".into()));
        }
        let m = n - 1;
        let theta = |i: usize| i + 1;
        for i in 1..=m {
            if self.p(theta(i)) != self.p(theta(Self::gamma(m, i))) {
                return Err(Error::SymmetryViolation(format!(
                    "p(theta({i})) != p(theta({}))",
                    Self::gamma(m, i)
                )));
            }
        }
        let mut g = vec![1i64; m + 1];
        for i in 1..=m {
            let j = Self::gamma(m, i);
            if j > i {
                g[j] = self.sign(theta(i));
            }
        }
        Ok(g)
    }
}
