use crate::error::Result;
use crate::scalars::GaussRational;

use super::{ParityMap, SuperMatrix};

/// The order-2 automorphism φ(e_ij) = −(−1)^{p(j)(p(i)+p(j))} g(i)g(j) e_{γ(j)γ(i)}.
pub fn phi(pm: &ParityMap, x: &SuperMatrix) -> Result<SuperMatrix> {
    let n = pm.size();
    let g = pm.g()?;
    let mut out = SuperMatrix::zero(n);
    for (&(i, j), c) in x.entries() {
        let sign_exp = pm.p(j) * (pm.p(i) ^ pm.p(j));
        let s = -(if sign_exp == 1 { -1 } else { 1 }) * g[i] * g[j];
        out.add_entry(
            ParityMap::gamma(n, j),
            ParityMap::gamma(n, i),
            &(c * &GaussRational::from_int(s)),
        );
    }
    Ok(out)
}

/// The order-4 automorphism ψ, defined on e_{θ(i)θ(j)} with θ(i) = i + 1.
///
/// `root` is the square root of −1 used in the formula.
pub fn psi_with_root(pm: &ParityMap, x: &SuperMatrix, root: &GaussRational) -> Result<SuperMatrix> {
    let size = pm.size();
    let gp = pm.g_prime()?;
    let m = size - 1;
    let gamma = |i: usize| ParityMap::gamma(m, i);
    let theta = |i: usize| i + 1;
    let minus_root = -root;
    let mut out = SuperMatrix::zero(size);
    for (&(a, b), c) in x.entries() {
        let (i, j) = (a - 1, b - 1);
        let (r, s, coeff) = match (i == 0, j == 0) {
            (true, true) => (1, 1, GaussRational::from_int(-1)),
            (false, true) => (
                1,
                theta(gamma(i)),
                &minus_root * &GaussRational::from_int(gp[gamma(i)]),
            ),
            (true, false) => (
                theta(gamma(j)),
                1,
                &minus_root * &GaussRational::from_int(gp[j]),
            ),
            (false, false) => {
                let e = pm.p(b) * (pm.p(a) ^ pm.p(b));
                let sign = if e == 1 { 1 } else { -1 };
                (
                    theta(gamma(j)),
                    theta(gamma(i)),
                    GaussRational::from_int(sign * gp[i] * gp[j]),
                )
            }
        };
        out.add_entry(r, s, &(c * &coeff));
    }
    Ok(out)
}

/// ψ with the root √−1 = i of ℚ(i).
pub fn psi(pm: &ParityMap, x: &SuperMatrix) -> Result<SuperMatrix> {
    psi_with_root(pm, x, &GaussRational::i())
}

/// Eigenvalue root ω for the twisted subalgebra ⊕ ker(ω^x − ψ) ⊗ t^x.
///
/// ψ is built with √−1 = i. Its g′ sign on ē_0 = −(e_12 − g′(N′−1)e_{N′1}) ⊗ t
/// is g′(N′−1) = −1, which puts ē_0 in the −i eigenspace, so ω = −i.
pub fn twist_eigenvalue() -> GaussRational {
    -GaussRational::i()
}

/// Whether X ⊗ t^x lies in the twisted subalgebra: ker((−1)^x − φ) for τ=2,
/// ker(ω^x − ψ) for τ=4 with ψ built from `root` and ω = −`root`.
/// Always true for τ=1.
pub fn twisted_membership_with_root(
    tau: u8,
    pm: &ParityMap,
    x: &SuperMatrix,
    deg: i64,
    root: &GaussRational,
) -> Result<bool> {
    match tau {
        2 => {
            let sign = GaussRational::from_int(if deg.rem_euclid(2) == 0 { 1 } else { -1 });
            Ok(phi(pm, x)? == x.scale(&sign))
        }
        4 => {
            let omega = -root;
            Ok(psi_with_root(pm, x, root)? == x.scale(&omega.pow(deg.rem_euclid(4))))
        }
        _ => Ok(true),
    }
}

/// [`twisted_membership_with_root`] with ψ built from √−1 = i.
pub fn twisted_membership(tau: u8, pm: &ParityMap, x: &SuperMatrix, deg: i64) -> Result<bool> {
    twisted_membership_with_root(tau, pm, x, deg, &GaussRational::i())
}
