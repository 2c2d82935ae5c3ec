use std::collections::BTreeMap;

use serde::Serialize;

use crate::case::Case;
use crate::error::Result;
use crate::lattice::Bicharacter;
use crate::quantalg::FreeElement;

use super::ZBundle;

/// An element that must vanish in the quotient by the Serre relators.
#[derive(Clone, Debug, Serialize)]
pub struct Target {
    pub name: String,
    pub element: FreeElement,
}

/// The τ = 2 root vector E_{ε_i ± ε_j}, 1 ≤ i < j ≤ N.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct RootLabel {
    pub i: usize,
    pub j: usize,
    pub plus: bool,
}

impl std::fmt::Display for RootLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = if self.plus { '+' } else { '-' };
        write!(f, "E(e{}{}e{})", self.i, s, self.j)
    }
}

/// E_{ε_i−ε_{i+1}} = E_i, E_{ε_i−ε_j} = ⟦E_{ε_i−ε_{j−1}}, E_{j−1}⟧,
/// E_{ε_i+ε_N} = ⟦E_{ε_i−ε_N}, E_N⟧, E_{ε_i+ε_j} = ⟦E_{ε_i+ε_{j+1}}, E_j⟧.
pub fn root_vectors_tau2(case: Case, bc: &Bicharacter) -> Result<BTreeMap<RootLabel, FreeElement>> {
    assert_eq!(case.tau, 2, "root vectors are defined for tau=2");
    let big_n = case.big_n();
    let e = FreeElement::letter;
    let mut out = BTreeMap::new();
    for i in 1..big_n {
        let minus = |j| RootLabel { i, j, plus: false };
        let plus = |j| RootLabel { i, j, plus: true };
        out.insert(minus(i + 1), e(i));
        for j in i + 2..=big_n {
            let x = out[&minus(j - 1)].q_bracket(&e(j - 1), bc)?;
            out.insert(minus(j), x);
        }
        let x = out[&minus(big_n)].q_bracket(&e(big_n), bc)?;
        out.insert(plus(big_n), x);
        for j in (i + 1..big_n).rev() {
            let x = out[&plus(j + 1)].q_bracket(&e(j), bc)?;
            out.insert(plus(j), x);
        }
    }
    Ok(out)
}

/// The vanishing statements for the τ = 2 root vectors.
pub fn root_vector_targets(case: Case, bc: &Bicharacter) -> Result<Vec<Target>> {
    let rv = root_vectors_tau2(case, bc)?;
    let e = FreeElement::letter;
    let big_n = case.big_n();
    let mut out = Vec::new();
    let mut push = |name: String, x: FreeElement| out.push(Target { name, element: x });
    for (lab, x) in &rv {
        let (i, j) = (lab.i, lab.j);
        if j >= i + 2 {
            push(format!("[E{i},{lab}]"), e(i).q_bracket(x, bc)?);
            if !lab.plus {
                push(format!("[{lab},E{}]", j - 1), x.q_bracket(&e(j - 1), bc)?);
            }
        }
        if lab.plus {
            push(format!("[{lab},E{j}]"), x.q_bracket(&e(j), bc)?);
        }
        for k in 0..=big_n {
            let excluded = [i as i64 - 1, i as i64, j as i64 - 1, j as i64];
            if !excluded.contains(&(k as i64)) {
                push(format!("[{lab},E{k}]"), x.q_bracket(&e(k), bc)?);
            }
        }
    }
    Ok(out)
}

/// ⟦B_i, E_j⟧ (j ∉ {i, N−i−1, N−i}), ⟦E_{N−i−1}, B_i⟧, ⟦A_i, E_j⟧
/// (j ∉ {i+1, N−i−1, N−i}) and ⟦E_{N−i}, A_i⟧; pairs whose letter is not a
/// generator are dropped.
pub fn tower_targets(case: Case, bc: &Bicharacter, zb: &ZBundle) -> Result<Vec<Target>> {
    let e = FreeElement::letter;
    let big_n = case.big_n() as i64;
    let r = case.rank() as i64;
    let mut out = Vec::new();
    for i in 0..case.n {
        let ii = i as i64;
        for j in 0..r {
            if ![ii, big_n - ii - 1, big_n - ii].contains(&j) {
                let x = zb.b[i].q_bracket(&e(j as usize), bc)?;
                out.push(Target {
                    name: format!("[B{i},E{j}]"),
                    element: x,
                });
            }
            if ![ii + 1, big_n - ii - 1, big_n - ii].contains(&j) {
                let x = zb.a[i].q_bracket(&e(j as usize), bc)?;
                out.push(Target {
                    name: format!("[A{i},E{j}]"),
                    element: x,
                });
            }
        }
        let k = big_n - ii - 1;
        out.push(Target {
            name: format!("[E{k},B{i}]"),
            element: e(k as usize).q_bracket(&zb.b[i], bc)?,
        });
        let k = big_n - ii;
        if k < r {
            out.push(Target {
                name: format!("[E{k},A{i}]"),
                element: e(k as usize).q_bracket(&zb.a[i], bc)?,
            });
        }
    }
    Ok(out)
}
