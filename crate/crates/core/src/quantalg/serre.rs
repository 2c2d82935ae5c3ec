use serde::Serialize;

use crate::error::Result;
use crate::lattice::{Bicharacter, Weight};

use super::free::{Coeff, FreeElement};

/// The four families of Serre-type relators, by shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum RelatorFamily {
    /// ⟦E_i, E_j⟧ with (α_i, α_j) = 0
    Commuting,
    /// ⟦E_i, ⟦E_i, E_j⟧⟧ with −2(α_i, α_j) = (α_i, α_i) ≠ 0
    Quadratic,
    /// ⟦E_i, ⟦E_i, ⟦E_i, E_j⟧⟧⟧ with −(α_i, α_j) = (α_i, α_i) ≠ 0
    Cubic,
    /// ⟦⟦E_i, E_j⟧, ⟦E_i, E_k⟧⟧ with (α_i, α_i) = (α_j, α_k) = 0 and
    /// −(α_i, α_j) = (α_i, α_k) ≠ 0
    FourIndex,
}

#[derive(Clone)]
pub struct Relator<C = crate::scalars::LaurentPoly> {
    pub family: RelatorFamily,
    pub indices: Vec<usize>,
    pub element: FreeElement<C>,
    pub degree: Weight,
}

impl<C: Coeff + std::fmt::Display> std::fmt::Debug for Relator<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} = {}", self.name(), self.element)
    }
}

impl<C: Coeff> Relator<C> {
    pub fn name(&self) -> String {
        let e = |i: usize| format!("E{i}");
        let ix = &self.indices;
        match self.family {
            RelatorFamily::Commuting => format!("[{},{}]", e(ix[0]), e(ix[1])),
            RelatorFamily::Quadratic => format!("[{0},[{0},{1}]]", e(ix[0]), e(ix[1])),
            RelatorFamily::Cubic => format!("[{0},[{0},[{0},{1}]]]", e(ix[0]), e(ix[1])),
            RelatorFamily::FourIndex => {
                format!("[[{0},{1}],[{0},{2}]]", e(ix[0]), e(ix[1]), e(ix[2]))
            }
        }
    }
}

/// The Serre-type relators with side conditions evaluated on `gram`.
///
/// Pairs related by ⟦Y, X⟧ = −χ(μ, λ)⟦X, Y⟧ (which applies whenever the
/// symmetrized bicharacter is 1) are emitted once: ⟦E_i, E_j⟧ only for i ≤ j
/// and the four-index relator only for j < k.
pub fn serre_relators<C: Coeff>(gram: &[Vec<i64>], bc: &Bicharacter) -> Result<Vec<Relator<C>>> {
    let r = gram.len();
    let e = |i: usize| FreeElement::<C>::letter(i);
    let mut out = Vec::new();
    let mut push = |family, indices: Vec<usize>, element: FreeElement<C>| {
        let degree = element.degree(r).unwrap_or_else(|| {
            indices
                .iter()
                .fold(Weight::zero(r), |w, &i| w.plus_simple(i, 1))
        });
        out.push(Relator {
            family,
            indices,
            element,
            degree,
        });
    };
    for i in 0..r {
        for j in i..r {
            if gram[i][j] == 0 {
                push(
                    RelatorFamily::Commuting,
                    vec![i, j],
                    e(i).q_bracket(&e(j), bc)?,
                );
            }
        }
    }
    for i in 0..r {
        for j in 0..r {
            let (gii, gij) = (gram[i][i], gram[i][j]);
            if i != j && gii != 0 && -2 * gij == gii {
                let x = e(i).q_bracket(&e(i).q_bracket(&e(j), bc)?, bc)?;
                push(RelatorFamily::Quadratic, vec![i, j], x);
            }
        }
    }
    for i in 0..r {
        for j in 0..r {
            let (gii, gij) = (gram[i][i], gram[i][j]);
            if i != j && gii != 0 && -gij == gii {
                let inner = e(i).q_bracket(&e(i).q_bracket(&e(j), bc)?, bc)?;
                push(
                    RelatorFamily::Cubic,
                    vec![i, j],
                    e(i).q_bracket(&inner, bc)?,
                );
            }
        }
    }
    for i in 0..r {
        for j in 0..r {
            for k in (j + 1)..r {
                if i == j || i == k {
                    continue;
                }
                let g = gram;
                if g[i][i] == 0 && g[j][k] == 0 && g[i][j] != 0 && -g[i][j] == g[i][k] {
                    let a = e(i).q_bracket(&e(j), bc)?;
                    let b = e(i).q_bracket(&e(k), bc)?;
                    push(
                        RelatorFamily::FourIndex,
                        vec![i, j, k],
                        a.q_bracket(&b, bc)?,
                    );
                }
            }
        }
    }
    Ok(out)
}
