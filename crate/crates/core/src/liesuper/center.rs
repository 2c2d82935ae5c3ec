use crate::case::Case;
use crate::report::Check;
use crate::scalars::GaussRational;

use super::automorphism::twisted_membership;
use super::{LoopElement, ParityMap, SuperMatrix};

const STMT_Z: &str = "Z_k^(1) = I (x) t^k, Z_k^(2) = Z_{2k-1}^(1), Z_k^(4) = Z_{4k-2}^(1)";
const STMT_CENTRAL: &str = "[X (x) t^r, Z_k^(1)] = 0 for X in sl, [c, Z_k] = 0, [Z_k, Z_s] = 0";
const STMT_DEG: &str = "[t d/dt, Z_k^(1)] = k Z_k^(1)";

/// t-degree of Z^(τ)_k inside the untwisted loop algebra.
pub fn z_degree(tau: u8, k: i64) -> i64 {
    match tau {
        2 => 2 * k - 1,
        4 => 4 * k - 2,
        _ => k,
    }
}

/// Z^(τ)_k = I ⊗ t^{deg} for a matrix size `size`.
pub fn z_classical(tau: u8, size: usize, k: i64) -> LoopElement {
    LoopElement::from_matrix(SuperMatrix::identity(size), z_degree(tau, k))
}

/// A basis of sl: off-diagonal matrix units and the supertraceless diagonal
/// differences (−1)^{p(i)} e_ii − (−1)^{p(i+1)} e_{i+1,i+1}.
pub fn sl_basis(pm: &ParityMap) -> Vec<SuperMatrix> {
    let n = pm.size();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push(SuperMatrix::unit(n, i, j));
            }
        }
    }
    for i in 1..n {
        let mut m = SuperMatrix::zero(n);
        m.add_entry(i, i, &GaussRational::from_int(pm.sign(i)));
        m.add_entry(i + 1, i + 1, &GaussRational::from_int(-pm.sign(i + 1)));
        out.push(m);
    }
    out
}

/// Centrality of the classical family Z_k over k, r, s in `range`.
pub fn check_z_ideal(case: Case, range: std::ops::RangeInclusive<i64>) -> Vec<Check> {
    let pm = ParityMap::for_case(case);
    let size = pm.size();
    let basis = sl_basis(&pm);
    let ks: Vec<i64> = range.collect();
    let br = |x: &LoopElement, y: &LoopElement| x.bracket(y, &pm);

    let mut central_fail: Option<String> = None;
    let mut count = 0usize;
    let c = LoopElement::c(size);
    for &k in &ks {
        let z = z_classical(1, size, k);
        for x in &basis {
            for &r in &ks {
                count += 1;
                let b = br(&LoopElement::from_matrix(x.clone(), r), &z);
                if !b.is_zero() && central_fail.is_none() {
                    central_fail = Some(format!("[{x} t^{r}, Z_{k}] = {b}"));
                }
            }
        }
        count += 1;
        if !br(&c, &z).is_zero() && central_fail.is_none() {
            central_fail = Some(format!("[c, Z_{k}] != 0"));
        }
        for &s in &ks {
            count += 1;
            let zz = br(&z, &z_classical(1, size, s));
            if !zz.is_zero() && central_fail.is_none() {
                central_fail = Some(format!("[Z_{k}, Z_{s}] = {zz}"));
            }
        }
    }

    let d = LoopElement::derivation(size);
    let deg_fail = ks.iter().find_map(|&k| {
        let z = z_classical(1, size, k);
        let lhs = br(&d, &z);
        let rhs = z.scale(&GaussRational::from_int(k));
        (lhs != rhs).then(|| format!("[d, Z_{k}] = {lhs}"))
    });

    let tw_fail = ks.iter().find_map(|&k| {
        let deg = z_degree(case.tau, k);
        match twisted_membership(case.tau, &pm, &SuperMatrix::identity(size), deg) {
            Ok(true) => None,
            Ok(false) => Some(format!("I t^{deg} outside the twisted subalgebra")),
            Err(e) => Some(e.to_string()),
        }
    });

    vec![
        Check::pass_if("classical.z_central", STMT_CENTRAL, central_fail.is_none())
            .with_data(serde_json::json!({ "brackets": count, "sl_basis": basis.len() }))
            .witness_on_fail(|| central_fail.unwrap_or_default()),
        Check::pass_if("classical.z_degree", STMT_DEG, deg_fail.is_none())
            .witness_on_fail(|| deg_fail.unwrap_or_default()),
        Check::pass_if("classical.z_twisted", STMT_Z, tw_fail.is_none())
            .witness_on_fail(|| tw_fail.unwrap_or_default()),
    ]
}
