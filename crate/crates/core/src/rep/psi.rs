use serde::Serialize;

use crate::case::Case;
use crate::error::{Error, Result};
use crate::lattice::{Bicharacter, EpsWeight, Lattice};
use crate::liesuper::ParityMap;
use crate::quantalg::FreeElement;
use crate::scalars::{LaurentPoly, Ring, Var};

use super::RepMatrix;

/// Images of K_{α_i}, L_{α_i}, E_i, F_i under the vector representation.
/// K_∂ and L_∂ act through the t-grading (see [`RepMatrix::twist`]).
#[derive(Clone, Debug, Serialize)]
pub struct Psi {
    pub case: Case,
    pub size: usize,
    pub k: Vec<RepMatrix>,
    pub l: Vec<RepMatrix>,
    pub e: Vec<RepMatrix>,
    pub f: Vec<RepMatrix>,
}

struct Ctx<'a> {
    bc: &'a Bicharacter,
    lat: Lattice,
    pm: ParityMap,
    size: usize,
}

fn q(e: i64) -> LaurentPoly {
    LaurentPoly::q_pow(e as i32)
}

fn t(e: i32) -> LaurentPoly {
    LaurentPoly::var_pow(Var::T, e)
}

fn z(i: usize) -> LaurentPoly {
    LaurentPoly::var(Var::Z(i as u8))
}

fn u(i: usize) -> LaurentPoly {
    LaurentPoly::var(Var::U(i as u8))
}

fn u_inv(i: usize) -> LaurentPoly {
    LaurentPoly::var_pow(Var::U(i as u8), -1)
}

fn int(n: i64) -> LaurentPoly {
    LaurentPoly::int(n)
}

/// q^k − q^{−k}
fn qdiff(k: i64) -> LaurentPoly {
    q(k).minus(&q(-k))
}

impl Ctx<'_> {
    fn x_pow(&self, i: usize, j: usize, e: i64) -> LaurentPoly {
        self.bc.chi_simple(i, j).pow(e).to_poly()
    }

    /// Π_{s=lo}^{hi−1} x_{is}^e (empty product 1).
    fn row_prod(&self, i: usize, lo: usize, hi: usize, e: i64) -> LaurentPoly {
        (lo..hi).fold(LaurentPoly::one(), |acc, s| acc.times(&self.x_pow(i, s, e)))
    }

    /// Π_{s=lo}^{hi−1} x_{si}^e.
    fn col_prod(&self, i: usize, lo: usize, hi: usize, e: i64) -> LaurentPoly {
        (lo..hi).fold(LaurentPoly::one(), |acc, s| acc.times(&self.x_pow(s, i, e)))
    }

    /// (ε_t, α_i) for 1-based t.
    fn eps_form(&self, t: usize, i: usize) -> i64 {
        let big_n = self.lat.case.big_n();
        self.lat
            .form_eps(&EpsWeight::eps(big_n, t), &self.lat.simple_roots()[i])
    }

    /// d̄_i: (−1)^{p̄(i)}, with the θ shift for τ = 4.
    fn dbar(&self, i: usize) -> i64 {
        if self.lat.case.tau == 4 {
            self.pm.sign(i + 1)
        } else {
            self.pm.sign(i)
        }
    }

    fn unit(&self, entries: &[(usize, usize, LaurentPoly)]) -> RepMatrix {
        let mut m = RepMatrix::zero(self.size);
        for (i, j, c) in entries {
            m.add(*i, *j, c);
        }
        m
    }
}

impl Psi {
    /// The generator images as printed, without checking the assumption on
    /// χ(α_i, δ̂).
    pub fn new(case: Case, bc: &Bicharacter) -> Self {
        let lat = Lattice::new(case);
        let cx = Ctx {
            bc,
            pm: ParityMap::for_case(case),
            size: case.n_prime(),
            lat,
        };
        let (k, l, e, f) = match case.tau {
            1 => tau1(&cx),
            2 => tau2(&cx),
            _ => tau4(&cx),
        };
        Psi {
            case,
            size: cx.size,
            k,
            l,
            e,
            f,
        }
    }

    /// As [`Psi::new`], but fails if χ(α_i, δ̂) = 1 (χ(α_i, 2δ̂) = 1 for
    /// τ = 4) does not hold for every i.
    pub fn checked(case: Case, bc: &Bicharacter) -> Result<Self> {
        let lat = Lattice::new(case);
        if let Some(&i) = bc.ass_violations(&lat).first() {
            return Err(Error::AssumptionViolated(i));
        }
        Ok(Self::new(case, bc))
    }

    pub fn rank(&self) -> usize {
        self.e.len()
    }

    /// Ψ of an element of the E-side free algebra.
    pub fn apply_e(&self, x: &FreeElement) -> RepMatrix {
        self.apply_with(x, &self.e)
    }

    /// Ψ of an element of the F-side free algebra.
    pub fn apply_f(&self, x: &FreeElement) -> RepMatrix {
        self.apply_with(x, &self.f)
    }

    fn apply_with(&self, x: &FreeElement, gens: &[RepMatrix]) -> RepMatrix {
        let mut out = RepMatrix::zero(self.size);
        if let Some(c) = x.coeff(&[]) {
            out = out.plus(&RepMatrix::identity(self.size).scale(c));
        }
        for (j, rest) in x.split_first() {
            out = out.plus(&gens[j as usize].mul(&self.apply_with(&rest, gens)));
        }
        out
    }
}

type Images = (
    Vec<RepMatrix>,
    Vec<RepMatrix>,
    Vec<RepMatrix>,
    Vec<RepMatrix>,
);

fn tau1(cx: &Ctx) -> Images {
    let n = cx.lat.case.big_n();
    let r = cx.lat.rank();
    let d1 = cx.dbar(1);
    let mut k = Vec::new();
    let mut l = Vec::new();
    for i in 0..r {
        let diag_k: Vec<_> = (1..=n)
            .map(|t| (t, t, z(i).times(&cx.row_prod(i, 0, t, -1))))
            .collect();
        k.push(cx.unit(&diag_k));
        let pre = z(i).times(&q(-2 * cx.eps_form(n, i)));
        let diag_l: Vec<_> = (1..=n)
            .map(|t| (t, t, pre.times(&cx.col_prod(i, 0, t, 1))))
            .collect();
        l.push(cx.unit(&diag_l));
    }
    let mut e = vec![cx.unit(&[(
        n,
        1,
        z(0).times(&u(0))
            .times(&int(d1))
            .times(&q(d1))
            .times(&qdiff(1))
            .times(&t(1)),
    )])];
    let mut f = vec![cx.unit(&[(1, n, u_inv(0).times(&t(-1)))])];
    for i in 1..r {
        let di = cx.dbar(i);
        let c = z(i)
            .times(&u(i))
            .times(&int(-di))
            .times(&q(-di))
            .times(&cx.row_prod(i, 0, i, -1))
            .times(&qdiff(1));
        e.push(cx.unit(&[(i, i + 1, c)]));
        f.push(cx.unit(&[(i + 1, i, u_inv(i))]));
    }
    (k, l, e, f)
}

fn tau2(cx: &Ctx) -> Images {
    let n = cx.lat.case.big_n();
    let np = cx.size;
    let gm = |t: usize| ParityMap::gamma(np, t);
    let r = cx.lat.rank();
    let d1 = cx.dbar(1);
    let mut k = Vec::new();
    let mut l = Vec::new();
    for i in 0..r {
        let mut dk = Vec::new();
        let mut dl = Vec::new();
        let pre = z(i).times(&q(2 * cx.eps_form(1, i)));
        for t in 1..=n {
            dk.push((t, t, z(i).times(&cx.row_prod(i, 0, t, -1))));
            dk.push((gm(t), gm(t), z(i).times(&cx.row_prod(i, 1, t, 1))));
            dl.push((t, t, pre.times(&cx.col_prod(i, 0, t, 1))));
            dl.push((gm(t), gm(t), pre.times(&cx.col_prod(i, 1, t, -1))));
        }
        k.push(cx.unit(&dk));
        l.push(cx.unit(&dl));
    }
    let c0 = z(0)
        .times(&u(0))
        .times(&int(-d1))
        .times(&q(-2 * d1))
        .times(&qdiff(2))
        .times(&t(1));
    let mut e = vec![cx.unit(&[(gm(1), 1, c0)])];
    let mut f = vec![cx.unit(&[(1, gm(1), u_inv(0).times(&t(-1)))])];
    for i in 1..n {
        let di = cx.dbar(i);
        let c = z(i)
            .times(&u(i))
            .times(&int(-di))
            .times(&q(-di))
            .times(&cx.row_prod(i, 0, i, -1))
            .times(&qdiff(1));
        let inner = q(2 * di)
            .times(&cx.x_pow(i, 0, 1))
            .times(&cx.row_prod(i, 1, i, 2));
        e.push(cx.unit(&[
            (i, i + 1, c.clone()),
            (gm(i + 1), gm(i), c.times(&inner).times(&int(-1))),
        ]));
        f.push(cx.unit(&[
            (i + 1, i, u_inv(i)),
            (gm(i), gm(i + 1), u_inv(i).times(&int(-1))),
        ]));
    }
    let dn = cx.dbar(n);
    let cn = z(n)
        .times(&u(n))
        .times(&int(-dn))
        .times(&cx.row_prod(n, 0, n, -1))
        .times(&q(-2 * dn))
        .times(&qdiff(2));
    e.push(cx.unit(&[(n, gm(n), cn)]));
    f.push(cx.unit(&[(gm(n), n, u_inv(n))]));
    (k, l, e, f)
}

fn tau4(cx: &Ctx) -> Images {
    let n = cx.lat.case.big_n();
    let np = cx.size;
    let theta = |t: usize| t + 1;
    // θ ∘ γ_{N′−1}: the index paired with θ(t)
    let mirror = |t: usize| theta(ParityMap::gamma(np - 1, t));
    let r = cx.lat.rank();
    let d1 = cx.dbar(1);
    let mut k = Vec::new();
    let mut l = Vec::new();
    for i in 0..r {
        let mut dk = Vec::new();
        let mut dl = Vec::new();
        for t in 0..=n + 1 {
            dk.push((theta(t), theta(t), z(i).times(&cx.row_prod(i, 0, t, -1))));
            dl.push((theta(t), theta(t), z(i).times(&cx.col_prod(i, 0, t, 1))));
        }
        for t in 1..=n {
            dk.push((mirror(t), mirror(t), z(i).times(&cx.row_prod(i, 0, t, 1))));
            dl.push((mirror(t), mirror(t), z(i).times(&cx.col_prod(i, 0, t, -1))));
        }
        k.push(cx.unit(&dk));
        l.push(cx.unit(&dl));
    }
    let c0 = z(0)
        .times(&u(0))
        .times(&int(-d1))
        .times(&qdiff(1))
        .times(&t(1));
    let mut e = vec![cx.unit(&[
        (theta(0), theta(1), c0.clone()),
        (mirror(1), theta(0), c0.times(&int(-1))),
    ])];
    let f0 = u_inv(0).times(&t(-1));
    let mut f = vec![cx.unit(&[
        (theta(1), theta(0), f0.clone()),
        (theta(0), mirror(1), f0.times(&int(-1))),
    ])];
    for i in 1..=n {
        let di = cx.dbar(i);
        let c = z(i)
            .times(&u(i))
            .times(&int(-di))
            .times(&q(-di))
            .times(&cx.row_prod(i, 0, i, -1))
            .times(&qdiff(1));
        let inner = q(2 * di).times(&cx.row_prod(i, 0, i, 2));
        let m = cx.unit(&[
            (theta(i), theta(i + 1), c.clone()),
            (mirror(i + 1), mirror(i), c.times(&inner).times(&int(-1))),
        ]);
        e.push(m);
        f.push(cx.unit(&[
            (theta(i + 1), theta(i), u_inv(i)),
            (mirror(i), mirror(i + 1), u_inv(i).times(&int(-1))),
        ]));
    }
    (k, l, e, f)
}
