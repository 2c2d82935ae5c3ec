use crate::case::Case;
use crate::lattice::Lattice;
use crate::report::{Check, Status};
use crate::scalars::GaussRational;

use super::automorphism::{phi, psi, twisted_membership};
use super::center::check_z_ideal;
use super::relations::check_relations;
use super::roots::{triangular_violation, weight_spaces};
use super::{Chevalley, LoopElement, ParityMap, SuperMatrix};

fn all_units(n: usize) -> Vec<SuperMatrix> {
    let mut out = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            out.push(SuperMatrix::unit(n, i, j));
        }
    }
    out
}

/// First matrix unit pair where `f` fails to be a bracket homomorphism.
fn automorphism_violation(
    pm: &ParityMap,
    f: &dyn Fn(&SuperMatrix) -> crate::Result<SuperMatrix>,
) -> crate::Result<Option<String>> {
    let units = all_units(pm.size());
    let images = units.iter().map(f).collect::<crate::Result<Vec<_>>>()?;
    for (a, fa) in units.iter().zip(&images) {
        for (b, fb) in units.iter().zip(&images) {
            let lhs = f(&a.bracket(b, pm))?;
            let rhs = fa.bracket(fb, pm);
            if lhs != rhs {
                return Ok(Some(format!("f([{a},{b}]) = {lhs}, [f a, f b] = {rhs}")));
            }
        }
    }
    Ok(None)
}

fn power_is_identity(
    pm: &ParityMap,
    f: &dyn Fn(&SuperMatrix) -> crate::Result<SuperMatrix>,
    k: usize,
) -> crate::Result<bool> {
    for u in all_units(pm.size()) {
        let mut x = u.clone();
        for _ in 0..k {
            x = f(&x)?;
        }
        if x != u {
            return Ok(false);
        }
    }
    Ok(true)
}

fn sl_preserved(
    pm: &ParityMap,
    f: &dyn Fn(&SuperMatrix) -> crate::Result<SuperMatrix>,
) -> crate::Result<bool> {
    for x in super::center::sl_basis(pm) {
        if !crate::scalars::Ring::is_zero(&f(&x)?.supertrace(pm)) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn err_check(id: &str, stmt: &str, e: crate::Error) -> Check {
    Check::new(id, stmt, Status::Fail).with_witness(e.to_string())
}

/// Checks on the order-2 or order-4 automorphism of the case.
fn automorphism_checks(case: Case, pm: &ParityMap) -> Vec<Check> {
    let minus_i = |x: &SuperMatrix| x.scale(&GaussRational::from_int(-1));
    let (name, order, f): (
        &str,
        usize,
        Box<dyn Fn(&SuperMatrix) -> crate::Result<SuperMatrix>>,
    ) = match case.tau {
        2 => ("phi", 2, Box::new(|x| phi(pm, x))),
        4 => ("psi", 4, Box::new(|x| psi(pm, x))),
        _ => return Vec::new(),
    };
    let mut out = Vec::new();
    let id = format!("classical.{name}_order");
    let stmt = if order == 2 {
        "phi^2 = id"
    } else {
        "psi^4 = id and psi^2 != id"
    };
    out.push(
        match (
            power_is_identity(pm, &*f, order),
            power_is_identity(pm, &*f, 2),
        ) {
            (Ok(full), Ok(half)) => {
                let ok = full && (order == 2 || !half);
                Check::pass_if(&id, stmt, ok).witness_on_fail(|| {
                    format!("order {order}: {full}, square is identity: {half}")
                })
            }
            (Err(e), _) | (_, Err(e)) => err_check(&id, stmt, e),
        },
    );
    let id = format!("classical.{name}_identity");
    let stmt = "the automorphism sends I to -I";
    let ident = SuperMatrix::identity(pm.size());
    out.push(match f(&ident) {
        Ok(x) => Check::pass_if(&id, stmt, x == minus_i(&ident)).witness_on_fail(|| x.to_string()),
        Err(e) => err_check(&id, stmt, e),
    });
    let id = format!("classical.{name}_homomorphism");
    let stmt = "the automorphism preserves the superbracket on all matrix units";
    out.push(match automorphism_violation(pm, &*f) {
        Ok(v) => Check::pass_if(&id, stmt, v.is_none()).witness_on_fail(|| v.unwrap_or_default()),
        Err(e) => err_check(&id, stmt, e),
    });
    let id = format!("classical.{name}_sl");
    let stmt = "the automorphism preserves supertraceless matrices";
    out.push(match sl_preserved(pm, &*f) {
        Ok(ok) => Check::pass_if(&id, stmt, ok),
        Err(e) => err_check(&id, stmt, e),
    });
    out
}

fn generator_checks(ch: &Chevalley) -> Vec<Check> {
    let case = ch.case;
    let mut twist_fail = None;
    let mut parity_fail = None;
    let gens =
        ch.e.iter()
            .enumerate()
            .map(|(i, x)| (format!("e{i}"), i, x))
            .chain(
                ch.f.iter()
                    .enumerate()
                    .map(|(i, x)| (format!("f{i}"), i, x)),
            )
            .chain(
                ch.h.iter()
                    .enumerate()
                    .map(|(i, x)| (format!("h{i}"), usize::MAX, x)),
            );
    for (name, i, x) in gens {
        for (&k, m) in x.parts() {
            match twisted_membership(case.tau, &ch.pm, m, k) {
                Ok(true) => {}
                Ok(false) => {
                    twist_fail.get_or_insert_with(|| format!("{name} part at t^{k}"));
                }
                Err(e) => {
                    twist_fail.get_or_insert_with(|| e.to_string());
                }
            }
        }
        let want = if i == usize::MAX {
            0
        } else {
            case.generator_parity(i)
        };
        if x.parity(&ch.pm) != Some(want) {
            parity_fail.get_or_insert_with(|| format!("{name} has parity {:?}", x.parity(&ch.pm)));
        }
    }
    vec![
        Check::pass_if(
            "classical.generators_twisted",
            "all h_i, e_i, f_i lie in the twisted loop subalgebra",
            twist_fail.is_none(),
        )
        .witness_on_fail(|| twist_fail.unwrap_or_default()),
        Check::pass_if(
            "classical.generator_parity",
            "e_i, f_i are odd exactly when i = n, or i = 0 for tau = 1",
            parity_fail.is_none(),
        )
        .witness_on_fail(|| parity_fail.unwrap_or_default()),
    ]
}

/// The full classical suite for one case.
pub fn classical_suite(case: Case) -> Vec<Check> {
    let ch = Chevalley::new(case);
    let lat = Lattice::new(case);
    let mut out = Vec::new();
    let stmt_gram = "[h_i,e_j] = (a_i,a_j) e_j with the form computed from the simple roots";
    match ch.derive_gram() {
        Ok(g) => {
            let ok = g.as_slice() == lat.gram();
            out.push(
                Check::pass_if("classical.gram", stmt_gram, ok)
                    .with_data(serde_json::json!({ "gram": g }))
                    .witness_on_fail(|| format!("derived {:?}, lattice {:?}", g, lat.gram())),
            );
            out.extend(check_relations(&ch, &g));
        }
        Err(e) => out.push(err_check("classical.gram", stmt_gram, e)),
    }
    out.extend(generator_checks(&ch));
    out.extend(automorphism_checks(case, &ch.pm));
    out.extend(check_z_ideal(case, -2..=2));
    let bound = lat.s_delta_height();
    let spaces = weight_spaces(&ch, bound);
    let tri = triangular_violation(&spaces);
    out.push(
        Check::pass_if(
            "classical.triangular",
            "brackets of the e_i stay in the positive part",
            tri.is_none(),
        )
        .with_data(serde_json::json!({ "height_bound": bound }))
        .witness_on_fail(|| tri.unwrap_or_default()),
    );
    out
}

/// Jacobi superidentity residual for homogeneous a, b, c:
/// [a,[b,c]] − [[a,b],c] − (−1)^{|a||b|}[b,[a,c]].
pub fn jacobi_residual(
    ch: &Chevalley,
    a: &LoopElement,
    b: &LoopElement,
    c: &LoopElement,
) -> LoopElement {
    let pa = a.parity(&ch.pm).unwrap_or(0);
    let pb = b.parity(&ch.pm).unwrap_or(0);
    let sign = GaussRational::from_int(if pa * pb == 1 { -1 } else { 1 });
    let lhs = ch.bracket(a, &ch.bracket(b, c));
    let r1 = ch.bracket(&ch.bracket(a, b), c);
    let r2 = ch.bracket(b, &ch.bracket(a, c)).scale(&sign);
    lhs.minus(&r1).minus(&r2)
}
