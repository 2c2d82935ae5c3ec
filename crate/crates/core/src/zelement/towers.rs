use serde::Serialize;

use crate::case::Case;
use crate::error::{Error, Result};
use crate::lattice::{Bicharacter, EpsWeight, Lattice, Weight};
use crate::quantalg::FreeElement;
use crate::scalars::SignedMonomial;

/// The B_i/A_i towers, the coefficients a_i and (once built) Z.
#[derive(Clone, Debug, Serialize)]
pub struct ZBundle {
    pub tau: u8,
    pub n: usize,
    pub s: i64,
    /// B_{n−1}, …, B_0 indexed by i.
    pub b: Vec<FreeElement>,
    /// B_{−1} for τ ∈ {2, 4}.
    pub b_minus: Option<FreeElement>,
    pub a: Vec<FreeElement>,
    /// a_0, …, a_{n−1}.
    pub coeffs: Vec<SignedMonomial>,
    /// a_{−1} for τ = 4.
    pub coeff_minus: Option<SignedMonomial>,
    pub z: Option<FreeElement>,
    pub degree: Weight,
}

fn e(i: usize) -> FreeElement {
    FreeElement::letter(i)
}

fn check_degree(what: &str, x: &FreeElement, expected: &Weight) -> Result<()> {
    let got = x.degree(expected.rank());
    if got.as_ref() != Some(expected) {
        return Err(Error::DegreeMismatch {
            what: what.to_string(),
            expected: expected.to_string(),
            got: got.map_or("inhomogeneous or zero".to_string(), |g| g.to_string()),
        });
    }
    Ok(())
}

/// ε_{t1} − ε_{t2} + k·δ̂ in the α-basis.
fn eps_weight(lat: &Lattice, t1: usize, t2: usize, k: i64) -> Weight {
    let big_n = lat.case.big_n();
    let w = EpsWeight::eps(big_n, t1)
        .sub(&EpsWeight::eps(big_n, t2))
        .add(&EpsWeight::delta(big_n).scale(k));
    lat.from_eps(&w).expect("weight lies in the root lattice")
}

/// B_i and A_i with their stated multidegrees asserted.
pub fn build_towers(case: Case, bc: &Bicharacter) -> Result<ZBundle> {
    let lat = Lattice::new(case);
    let (n, big_n, s) = (case.n, case.big_n(), case.s());
    let br = |x: &FreeElement, y: &FreeElement| x.q_bracket(y, bc);

    let mut b = vec![FreeElement::zero(); n];
    b[n - 1] = e(n);
    for i in (0..n - 1).rev() {
        b[i] = br(&e(big_n - i - 1), &br(&b[i + 1], &e(i + 1))?)?;
    }
    for (i, bi) in b.iter().enumerate() {
        check_degree(
            &format!("B_{i}"),
            bi,
            &eps_weight(&lat, i + 1, big_n - i, 0),
        )?;
    }
    let b_minus = if case.tau == 1 {
        None
    } else {
        Some(br(&e(big_n), &br(&b[0], &e(0))?)?)
    };

    let mut a = Vec::with_capacity(n);
    a.push(match case.tau {
        1 => e(0),
        2 => b_minus.clone().unwrap(),
        _ => br(&e(big_n), &br(b_minus.as_ref().unwrap(), &e(0))?)?,
    });
    for i in 1..n {
        let next = br(&e(big_n - i), &br(&a[i - 1], &e(i))?)?;
        a.push(next);
    }
    for (i, ai) in a.iter().enumerate() {
        check_degree(
            &format!("A_{i}"),
            ai,
            &eps_weight(&lat, big_n - i, i + 1, s),
        )?;
    }

    let coeffs = (0..n).map(|i| coeff_a(case, bc, i as i64)).collect();
    let coeff_minus = (case.tau == 4).then(|| coeff_a(case, bc, -1));
    Ok(ZBundle {
        tau: case.tau,
        n,
        s,
        b,
        b_minus,
        a,
        coeffs,
        coeff_minus,
        z: None,
        degree: lat.s_delta(),
    })
}

/// a_i; the recursion is applied for every i in 1..n−1 and a_{−1} is the
/// τ = 4 coefficient of (B_{−1})².
pub fn coeff_a(case: Case, bc: &Bicharacter, i: i64) -> SignedMonomial {
    let lat = Lattice::new(case);
    let r = case.rank();
    let big_n = case.big_n();
    let alpha = |k: usize| Weight::simple(r, k);
    let span = |lo: usize, hi: usize| (lo..=hi).fold(Weight::zero(r), |w, t| &w + &alpha(t));
    if i == -1 {
        assert_eq!(case.tau, 4, "a_{{-1}} only exists for tau=4");
        let d = lat.delta();
        return bc
            .chi(&alpha(big_n), &alpha(0))
            .mul(&bc.chi(&alpha(0), d))
            .mul(&bc.chi(&alpha(big_n), d));
    }
    let sd = lat.s_delta();
    let mut acc = SignedMonomial::one();
    for k in 1..=i as usize {
        let f1 = bc.chi(&sd, &alpha(big_n - k));
        let f2 = bc.chi(&-&alpha(k), &span(k + 1, big_n - k - 1));
        let f3 = bc.chi(&span(k, big_n - k - 1), &-&alpha(big_n - k));
        acc = acc.mul(&f1).mul(&f2).mul(&f3);
    }
    acc
}

/// Z = Σ a_i⟦A_i, B_i⟧, plus a_{−1}(B_{−1})² for τ = 4.
pub fn build_z(case: Case, bc: &Bicharacter) -> Result<ZBundle> {
    let mut zb = build_towers(case, bc)?;
    let mut z = FreeElement::zero();
    for i in 0..zb.n {
        let t = zb.a[i].q_bracket(&zb.b[i], bc)?;
        z = z.plus(&t.scale_unit(&zb.coeffs[i]));
    }
    if let (Some(bm), Some(c)) = (&zb.b_minus, &zb.coeff_minus) {
        z = z.plus(&bm.mul(bm).scale_unit(c));
    }
    check_degree("Z", &z, &zb.degree)?;
    zb.z = Some(z);
    Ok(zb)
}

impl ZBundle {
    pub fn z(&self) -> &FreeElement {
        self.z.as_ref().expect("Z not built")
    }
}
