use serde::Serialize;

use super::{EpsWeight, Weight};
use crate::case::Case;

/// Weight lattice data for one case: simple roots, δ̂ and the form.
#[derive(Clone, Debug, Serialize)]
pub struct Lattice {
    pub case: Case,
    roots: Vec<EpsWeight>,
    delta: Weight,
    gram: Vec<Vec<i64>>,
}

impl Lattice {
    pub fn new(case: Case) -> Self {
        let roots = simple_roots(case);
        let mut lat = Lattice {
            case,
            roots,
            delta: Weight::zero(case.rank()),
            gram: Vec::new(),
        };
        let r = case.rank();
        lat.gram = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| lat.form_eps(&lat.roots[i], &lat.roots[j]))
                    .collect()
            })
            .collect();
        lat.delta = lat
            .from_eps(&EpsWeight::delta(case.big_n()))
            .expect("delta lies in the root lattice");
        lat
    }

    pub fn rank(&self) -> usize {
        self.case.rank()
    }

    /// α_0..α_N̂ in the ε-basis.
    pub fn simple_roots(&self) -> &[EpsWeight] {
        &self.roots
    }

    /// δ̂ in the α-basis.
    pub fn delta(&self) -> &Weight {
        &self.delta
    }

    /// s·δ̂, the degree of the central element.
    pub fn s_delta(&self) -> Weight {
        self.delta.scale(self.case.s())
    }

    pub fn alpha(&self, i: usize) -> Weight {
        Weight::simple(self.rank(), i)
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// (ε_i,ε_j) = δ_ij d̄_i, (ε_i,δ̂) = (δ̂,δ̂) = (∂,∂) = (ε_i,∂) = 0, (∂,δ̂) = 1.
    pub fn form_eps(&self, x: &EpsWeight, y: &EpsWeight) -> i64 {
        let mut s = 0;
        for (t, (a, b)) in x.eps.iter().zip(&y.eps).enumerate() {
            s += a * b * self.case.eps_sign(t + 1);
        }
        s + x.delta * y.d + x.d * y.delta
    }

    pub fn form(&self, x: &Weight, y: &Weight) -> i64 {
        let mut s = 0;
        for (i, &a) in x.alpha.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.alpha.iter().enumerate() {
                s += a * b * self.gram[i][j];
            }
        }
        // (∂, α_j) = δ_{j0}
        s + x.d * y.alpha[0] + y.d * x.alpha[0]
    }

    pub fn to_eps(&self, w: &Weight) -> EpsWeight {
        let mut out = EpsWeight::zero(self.case.big_n());
        for (i, &c) in w.alpha.iter().enumerate() {
            if c != 0 {
                out = out.add(&self.roots[i].scale(c));
            }
        }
        out.d += w.d;
        out
    }

    /// Express an ε-basis weight in the α-basis, if it lies in the lattice.
    pub fn from_eps(&self, e: &EpsWeight) -> Option<Weight> {
        let big_n = self.case.big_n();
        let mut alpha = vec![0i64; self.rank()];
        // only α_0 carries δ̂
        alpha[0] = e.delta;
        let rest = e.sub(&self.roots[0].scale(e.delta));
        // α_i = ε_i − ε_{i+1} for 1 ≤ i ≤ N−1: prefix sums
        let mut acc = 0;
        for t in 1..big_n {
            acc += rest.eps[t - 1];
            alpha[t] = acc;
        }
        let last = acc + rest.eps[big_n - 1];
        match self.case.tau {
            1 => {
                if last != 0 {
                    return None;
                }
            }
            2 => {
                if last % 2 != 0 {
                    return None;
                }
                alpha[big_n] = last / 2;
            }
            _ => alpha[big_n] = last,
        }
        let w = Weight { alpha, d: e.d };
        (self.to_eps(&w) == *e).then_some(w)
    }

    /// Height of s·δ̂.
    pub fn s_delta_height(&self) -> i64 {
        self.s_delta().height()
    }
}

/// α_i in the ε-basis, derived from the weights of the classical generators ē_i.
pub fn simple_roots(case: Case) -> Vec<EpsWeight> {
    let big_n = case.big_n();
    let e = |t| EpsWeight::eps(big_n, t);
    let delta = EpsWeight::delta(big_n);
    let mut roots = Vec::with_capacity(case.rank());
    roots.push(match case.tau {
        1 => delta.sub(&e(1)).add(&e(big_n)),
        2 => delta.sub(&e(1).scale(2)),
        _ => delta.sub(&e(1)),
    });
    for i in 1..big_n {
        roots.push(e(i).sub(&e(i + 1)));
    }
    match case.tau {
        1 => {}
        2 => roots.push(e(big_n).scale(2)),
        _ => roots.push(e(big_n)),
    }
    roots
}

/// α_i exactly as printed in the source text, kept for the discrepancy report.
pub fn literal_simple_roots(case: Case) -> Vec<EpsWeight> {
    let big_n = case.big_n();
    let e = |t| EpsWeight::eps(big_n, t);
    let delta = EpsWeight::delta(big_n);
    let mut roots = Vec::with_capacity(case.rank());
    roots.push(match case.tau {
        1 => delta.sub(&e(1)).add(&e(case.n_hat())),
        _ => delta.sub(&e(1).scale(2)),
    });
    for i in 1..big_n {
        roots.push(e(i).sub(&e(i + 1)));
    }
    match case.tau {
        1 => {}
        2 => roots.push(e(big_n)),
        _ => roots.push(e(big_n).scale(2)),
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat(tau: u8, n: usize) -> Lattice {
        Lattice::new(Case::new(tau, n).unwrap())
    }

    #[test]
    fn alpha_one_is_eps1_minus_eps2() {
        let l = lat(1, 2);
        let mut want = EpsWeight::zero(4);
        want.eps[0] = 1;
        want.eps[1] = -1;
        assert_eq!(l.simple_roots()[1], want);
    }

    #[test]
    fn odd_isotropic_node() {
        let l = lat(1, 2);
        assert_eq!(l.gram()[2][2], 0);
    }

    #[test]
    fn delta_expansion_tau2() {
        assert_eq!(lat(2, 2).delta().alpha, vec![1, 2, 2, 2, 1]);
    }

    #[test]
    fn delta_and_partial() {
        let l = lat(1, 2);
        let d = l.delta().clone();
        let p = Weight::partial(l.rank());
        assert_eq!(l.form(&d, &d), 0);
        assert_eq!(l.form(&p, &d), 1);
        assert_eq!(l.form(&l.alpha(0), &d), 0);
    }

    #[test]
    fn delta_in_root_lattice_all_cases() {
        for c in Case::test_cases() {
            let l = Lattice::new(c);
            assert_eq!(l.to_eps(l.delta()), EpsWeight::delta(c.big_n()));
            for i in 0..l.rank() {
                assert_eq!(l.form(&l.alpha(i), l.delta()), 0);
            }
        }
    }
}
