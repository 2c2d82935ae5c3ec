use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Lattice, Weight};
use crate::case::Case;
use crate::scalars::{SignedMonomial, Var};

/// How the free entries of a bicharacter are chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BicharMode {
    /// χ̂(α_i,α_j) = q^{(α_i,α_j)} for i ≠ j.
    Hat,
    /// Free parameters p_ij (1 ≤ i < j ≤ N̂), affine-node entries solved from
    /// χ(α_i, δ̂) = 1.
    SolvedSymbolic,
    /// Free parameters p_ij for every pair i < j.
    Free,
    /// Solved bicharacter with every p_ij specialized to a power of q.
    Explicit,
}

impl fmt::Display for BicharMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BicharMode::Hat => "hat",
            BicharMode::SolvedSymbolic => "solved-symbolic",
            BicharMode::Free => "free",
            BicharMode::Explicit => "explicit",
        };
        write!(f, "{s}")
    }
}

impl std::str::FromStr for BicharMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "hat" => Ok(BicharMode::Hat),
            "solved-symbolic" | "solved" => Ok(BicharMode::SolvedSymbolic),
            "free" => Ok(BicharMode::Free),
            "explicit" => Ok(BicharMode::Explicit),
            _ => Err(format!("unknown bicharacter mode {s:?}")),
        }
    }
}

/// A bicharacter χ on V̂, given by its values on simple roots.
///
/// χ(∂,α_i) = χ(α_i,∂) = q^{δ_i0} and χ(∂,∂) = 1 are fixed.
#[derive(Clone, Debug, Serialize)]
pub struct Bicharacter {
    pub case: Case,
    pub mode: BicharMode,
    table: Vec<Vec<SignedMonomial>>,
}

/// χ(α_i,α_i) as forced by the form.
fn diagonal(g: i64) -> SignedMonomial {
    if g == 0 {
        SignedMonomial::minus_one()
    } else {
        SignedMonomial::q_pow(g)
    }
}

impl Bicharacter {
    pub fn from_table(case: Case, mode: BicharMode, table: Vec<Vec<SignedMonomial>>) -> Self {
        Bicharacter { case, mode, table }
    }

    pub fn new(lat: &Lattice, mode: BicharMode) -> Self {
        match mode {
            BicharMode::Hat => Self::hat(lat),
            BicharMode::SolvedSymbolic => Self::solve_ass(lat),
            BicharMode::Free => Self::free(lat),
            BicharMode::Explicit => panic!("explicit bicharacters need assignments"),
        }
    }

    pub fn hat(lat: &Lattice) -> Self {
        let g = lat.gram();
        let r = lat.rank();
        let table = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        if i == j {
                            diagonal(g[i][i])
                        } else {
                            SignedMonomial::q_pow(g[i][j])
                        }
                    })
                    .collect()
            })
            .collect();
        Self::from_table(lat.case, BicharMode::Hat, table)
    }

    /// Every off-diagonal pair i < j carries a free parameter p_ij with
    /// χ(α_i,α_j) = p_ij and χ(α_j,α_i) = q^{2(α_i,α_j)} / p_ij.
    pub fn free(lat: &Lattice) -> Self {
        let mut b = Self::hat(lat);
        b.mode = BicharMode::Free;
        let g = lat.gram();
        for i in 0..lat.rank() {
            for j in i + 1..lat.rank() {
                let p = SignedMonomial::var_pow(Var::P(i as u8, j as u8), 1);
                b.table[j][i] = SignedMonomial::q_pow(2 * g[i][j]).mul(&p.inv());
                b.table[i][j] = p;
            }
        }
        b
    }

    /// Free p_ij for 1 ≤ i < j ≤ N̂; the entries χ(α_i,α_0), χ(α_0,α_i) are
    /// solved so that χ(α_i, δ̂) = 1 for i ≥ 1.
    pub fn solve_ass(lat: &Lattice) -> Self {
        let mut b = Self::free(lat);
        b.mode = BicharMode::SolvedSymbolic;
        let g = lat.gram();
        let c = &lat.delta().alpha;
        debug_assert_eq!(c[0], 1);
        for i in 1..lat.rank() {
            let mut rest = SignedMonomial::one();
            for (j, &cj) in c.iter().enumerate().skip(1) {
                rest = rest.mul(&b.table[i][j].pow(cj));
            }
            b.table[i][0] = rest.inv();
            b.table[0][i] = SignedMonomial::q_pow(2 * g[0][i]).mul(&b.table[i][0].inv());
        }
        b
    }

    /// Substitute p_ij ↦ q^{k_ij}; unassigned parameters stay symbolic.
    pub fn specialize(&self, assign: &BTreeMap<Var, i64>) -> Self {
        let f = |v: Var| match assign.get(&v) {
            Some(&k) => SignedMonomial::q_pow(k),
            None => SignedMonomial::var_pow(v, 1),
        };
        let table = self
            .table
            .iter()
            .map(|row| row.iter().map(|x| x.substitute(&f)).collect())
            .collect();
        Bicharacter {
            case: self.case,
            mode: BicharMode::Explicit,
            table,
        }
    }

    /// χ^op(a, b) = χ(b, a).
    pub fn opposite(&self) -> Self {
        let r = self.rank();
        let table = (0..r)
            .map(|i| (0..r).map(|j| self.table[j][i].clone()).collect())
            .collect();
        Self::from_table(self.case, self.mode, table)
    }

    pub fn rank(&self) -> usize {
        self.table.len()
    }

    /// χ(α_i, α_j).
    pub fn entry(&self, i: usize, j: usize) -> &SignedMonomial {
        &self.table[i][j]
    }

    pub fn table(&self) -> &[Vec<SignedMonomial>] {
        &self.table
    }

    /// χ(x, y) by biadditivity.
    pub fn chi(&self, x: &Weight, y: &Weight) -> SignedMonomial {
        let mut out = SignedMonomial::one();
        for (i, &a) in x.alpha.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.alpha.iter().enumerate() {
                if b != 0 {
                    out = out.mul(&self.table[i][j].pow(a * b));
                }
            }
        }
        let qexp = x.d * y.alpha[0] + x.alpha[0] * y.d;
        if qexp != 0 {
            out = out.mul(&SignedMonomial::q_pow(qexp));
        }
        out
    }

    /// χ(α_i, α_j) for simple-root indices, as a weight-free shortcut.
    pub fn chi_simple(&self, i: usize, j: usize) -> &SignedMonomial {
        &self.table[i][j]
    }

    /// Check the defining constraints on simple roots; returns the violated ones.
    pub fn constraint_violations(&self, lat: &Lattice) -> Vec<String> {
        let g = lat.gram();
        let mut bad = Vec::new();
        for i in 0..self.rank() {
            if self.table[i][i] != diagonal(g[i][i]) {
                bad.push(format!("chi(alpha_{i},alpha_{i}) = {}", self.table[i][i]));
            }
            for j in 0..self.rank() {
                if i != j {
                    let prod = self.table[i][j].mul(&self.table[j][i]);
                    if prod != SignedMonomial::q_pow(2 * g[i][j]) {
                        bad.push(format!(
                            "chi(alpha_{i},alpha_{j})chi(alpha_{j},alpha_{i}) = {prod}"
                        ));
                    }
                }
            }
        }
        bad
    }

    /// Indices i with χ(α_i, s′δ̂) ≠ 1 (s′ = 2 for τ = 4, else 1).
    pub fn ass_violations(&self, lat: &Lattice) -> Vec<usize> {
        let s = if self.case.tau == 4 { 2 } else { 1 };
        let d = lat.delta().scale(s);
        (0..self.rank())
            .filter(|&i| !self.chi(&lat.alpha(i), &d).is_one())
            .collect()
    }

    pub fn validate_ass(&self, lat: &Lattice) -> bool {
        self.ass_violations(lat).is_empty()
    }

    /// The free parameters occurring in the table.
    pub fn parameters(&self) -> Vec<Var> {
        let mut v: Vec<Var> = self
            .table
            .iter()
            .flatten()
            .flat_map(|x| x.mono.vars().collect::<Vec<_>>())
            .filter(|v| *v != Var::Q)
            .collect();
        v.sort();
        v.dedup();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat(tau: u8, n: usize) -> Lattice {
        Lattice::new(Case::new(tau, n).unwrap())
    }

    #[test]
    fn isotropic_diagonal_is_minus_one() {
        let l = lat(1, 2);
        let b = Bicharacter::hat(&l);
        assert_eq!(b.chi(&l.alpha(2), &l.alpha(2)), SignedMonomial::minus_one());
    }

    #[test]
    fn partial_partial_and_zero() {
        let l = lat(2, 2);
        let b = Bicharacter::solve_ass(&l);
        let p = Weight::partial(l.rank());
        assert!(b.chi(&p, &p).is_one());
        assert!(b.chi(&l.alpha(3), &Weight::zero(l.rank())).is_one());
    }

    #[test]
    fn free_parameters_violate_ass() {
        for c in Case::test_cases() {
            let l = Lattice::new(c);
            assert!(!Bicharacter::free(&l).validate_ass(&l), "{c}");
        }
    }

    #[test]
    fn solved_satisfies_ass_and_constraints() {
        for c in Case::test_cases() {
            let l = Lattice::new(c);
            let b = Bicharacter::solve_ass(&l);
            assert!(b.validate_ass(&l), "{c}");
            assert!(b.constraint_violations(&l).is_empty(), "{c}");
        }
    }

    #[test]
    fn solved_tau12_keeps_expected_parameters() {
        let l = lat(1, 2);
        let b = Bicharacter::solve_ass(&l);
        let want: Vec<Var> = [(1, 2), (1, 3), (2, 3)]
            .into_iter()
            .map(|(i, j)| Var::P(i, j))
            .collect();
        assert_eq!(b.parameters(), want);
    }
}
