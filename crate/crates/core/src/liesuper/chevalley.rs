use serde::Serialize;

use crate::case::Case;
use crate::error::{Error, Result};
use crate::scalars::GaussRational;

use super::{LoopElement, ParityMap, SuperMatrix};

/// Chevalley generators h̄_i, ē_i, f̄_i (i ∈ 0..=N̂) of sl^(τ)(M|M) in the
/// loop realization.
#[derive(Clone, Debug, Serialize)]
pub struct Chevalley {
    pub case: Case,
    pub pm: ParityMap,
    pub h: Vec<LoopElement>,
    pub e: Vec<LoopElement>,
    pub f: Vec<LoopElement>,
}

struct Builder {
    size: usize,
}

impl Builder {
    /// Σ coeff·e_ij ⊗ t^k
    fn elt(&self, terms: &[(i64, usize, usize)], k: i64) -> LoopElement {
        let mut m = SuperMatrix::zero(self.size);
        for &(c, i, j) in terms {
            m.add_entry(i, j, &GaussRational::from_int(c));
        }
        LoopElement::from_matrix(m, k)
    }

    fn with_c(&self, x: LoopElement, c: i64) -> LoopElement {
        x.plus(&LoopElement::c(self.size).scale(&GaussRational::from_int(c)))
    }
}

impl Chevalley {
    pub fn new(case: Case) -> Self {
        let pm = ParityMap::for_case(case);
        let b = Builder {
            size: case.n_prime(),
        };
        let (h, e, f) = match case.tau {
            1 => tau1(case, &pm, &b),
            2 => tau2(case, &pm, &b),
            _ => tau4(case, &pm, &b),
        };
        Chevalley { case, pm, h, e, f }
    }

    pub fn size(&self) -> usize {
        self.case.n_prime()
    }

    pub fn rank(&self) -> usize {
        self.e.len()
    }

    pub fn bracket(&self, x: &LoopElement, y: &LoopElement) -> LoopElement {
        x.bracket(y, &self.pm)
    }

    /// G[i][j] with [h̄_i, ē_j] = G[i][j]·ē_j, read off from the realization.
    pub fn derive_gram(&self) -> Result<Vec<Vec<i64>>> {
        let r = self.rank();
        let mut g = vec![vec![0; r]; r];
        for i in 0..r {
            for j in 0..r {
                let br = self.bracket(&self.h[i], &self.e[j]);
                let lambda = br
                    .ratio_to(&self.e[j])
                    .ok_or(Error::NotProportional { i, j })?;
                if !lambda.is_real() || !lambda.re.is_integer() {
                    return Err(Error::NotProportional { i, j });
                }
                g[i][j] = lambda.re.to_integer().try_into().expect("small integer");
            }
        }
        Ok(g)
    }
}

type Triple = (Vec<LoopElement>, Vec<LoopElement>, Vec<LoopElement>);

fn tau1(case: Case, pm: &ParityMap, b: &Builder) -> Triple {
    let n = case.big_n();
    let d = |i: usize| pm.sign(i);
    let mut h = vec![b.with_c(b.elt(&[(-d(1), 1, 1), (d(n), n, n)], 0), 1)];
    let mut e = vec![b.elt(&[(d(n), n, 1)], 1)];
    let mut f = vec![b.elt(&[(1, 1, n)], -1)];
    for i in 1..n {
        h.push(b.elt(&[(d(i), i, i), (-d(i + 1), i + 1, i + 1)], 0));
        e.push(b.elt(&[(d(i), i, i + 1)], 0));
        f.push(b.elt(&[(1, i + 1, i)], 0));
    }
    (h, e, f)
}

fn tau2(case: Case, pm: &ParityMap, b: &Builder) -> Triple {
    let n = case.big_n();
    let np = case.n_prime();
    let gm = |i: usize| ParityMap::gamma(np, i);
    let d = |i: usize| pm.sign(i);
    let g = pm.g().expect("tau=2 parity is gamma-symmetric");
    let p = |i: usize| i64::from(pm.p(i));
    let pow = |e: i64| if e % 2 == 0 { 1 } else { -1 };
    let g1 = gm(1);
    let mut h = vec![b.with_c(b.elt(&[(-2 * d(1), 1, 1), (2 * d(1), g1, g1)], 0), 2)];
    let mut e = vec![b.elt(&[(2 * d(1), g1, 1)], 1)];
    let mut f = vec![b.elt(&[(1, 1, g1)], -1)];
    for i in 1..n {
        let j = i + 1;
        h.push(b.elt(
            &[
                (d(i), i, i),
                (-d(j), j, j),
                (d(j), gm(j), gm(j)),
                (-d(i), gm(i), gm(i)),
            ],
            0,
        ));
        let se = pow(p(i) * p(j) + p(j)) * g[i] * g[j];
        e.push(b.elt(&[(d(i), i, j), (-d(i) * se, gm(j), gm(i))], 0));
        let sf = pow(p(j) * p(i) + p(i)) * g[j] * g[i];
        f.push(b.elt(&[(1, j, i), (-sf, gm(i), gm(j))], 0));
    }
    h.push(b.elt(&[(2 * d(n), n, n), (-2 * d(n), gm(n), gm(n))], 0));
    e.push(b.elt(&[(2 * d(n), n, gm(n))], 0));
    f.push(b.elt(&[(1, gm(n), n)], 0));
    (h, e, f)
}

fn tau4(case: Case, pm: &ParityMap, b: &Builder) -> Triple {
    let n = case.big_n();
    let np = case.n_prime();
    let theta = |i: usize| i + 1;
    let gm = |i: usize| ParityMap::gamma(np - 1, i);
    // the index paired with θ(t)
    let mirror = |t: usize| theta(gm(t));
    let d = |t: usize| pm.sign(theta(t));
    let gp = pm.g_prime().expect("tau=4 parity is symmetric");
    let p = |t: usize| i64::from(pm.p(theta(t)));
    let pow = |e: i64| if e % 2 == 0 { 1 } else { -1 };
    let (t0, t1, m1) = (theta(0), theta(1), mirror(1));
    let mut h = vec![b.with_c(b.elt(&[(-d(1), t1, t1), (d(1), m1, m1)], 0), 2)];
    let mut e = vec![b.elt(&[(-1, t0, t1), (gp[gm(1)], m1, t0)], 1)];
    let mut f = vec![b.elt(&[(1, t1, t0), (gp[1], t0, m1)], -1)];
    for i in 1..=n {
        let j = i + 1;
        if i < n {
            h.push(b.elt(
                &[
                    (d(i), theta(i), theta(i)),
                    (-d(j), theta(j), theta(j)),
                    (d(j), mirror(j), mirror(j)),
                    (-d(i), mirror(i), mirror(i)),
                ],
                0,
            ));
        } else {
            h.push(b.elt(
                &[(d(n), theta(n), theta(n)), (-d(n), mirror(n), mirror(n))],
                0,
            ));
        }
        let se = pow(p(i) * p(j) + p(j)) * gp[i] * gp[j];
        e.push(b.elt(
            &[
                (d(i), theta(i), theta(j)),
                (-d(i) * se, mirror(j), mirror(i)),
            ],
            0,
        ));
        let sf = pow(p(j) * p(i) + p(i)) * gp[j] * gp[i];
        f.push(b.elt(&[(1, theta(j), theta(i)), (-sf, mirror(i), mirror(j))], 0));
    }
    (h, e, f)
}
