use zcentral::error::Error;
use zcentral::lattice::{BicharMode, Bicharacter, Lattice};
use zcentral::quantalg::FreeElement;
use zcentral::rep::{check_rep, classical_limit, psi_z, Psi, RepMatrix};
use zcentral::report::Status;
use zcentral::scalars::{GaussRational, LaurentPoly, Ring, Var};
use zcentral::zelement::build_z;
use zcentral::Case;

fn case(tau: u8, n: usize) -> Case {
    Case::new(tau, n).unwrap()
}

fn setup(c: Case, mode: BicharMode) -> (Bicharacter, Psi) {
    let bc = Bicharacter::new(&Lattice::new(c), mode);
    let psi = Psi::new(c, &bc);
    (bc, psi)
}

fn unit(size: usize, i: usize, j: usize, c: LaurentPoly) -> RepMatrix {
    let mut m = RepMatrix::zero(size);
    m.add(i, j, &c);
    m
}

#[test]
fn f1_of_tau1_is_a_single_matrix_unit() {
    let (_, psi) = setup(case(1, 2), BicharMode::Hat);
    let want = unit(4, 2, 1, LaurentPoly::var_pow(Var::U(1), -1));
    assert_eq!(psi.f[1], want);
}

#[test]
fn f0_of_tau2_lowers_the_loop_degree() {
    let (_, psi) = setup(case(2, 2), BicharMode::Hat);
    let c = LaurentPoly::var_pow(Var::U(0), -1).times(&LaurentPoly::var_pow(Var::T, -1));
    assert_eq!(psi.f[0], unit(8, 1, 8, c));
}

#[test]
fn unit_maps_to_identity() {
    let (_, psi) = setup(case(4, 1), BicharMode::Hat);
    assert_eq!(psi.apply_e(&FreeElement::one()), RepMatrix::identity(6));
    assert_eq!(psi.apply_f(&FreeElement::one()), RepMatrix::identity(6));
}

#[test]
fn matrix_units_compose_on_the_inner_index() {
    let one = LaurentPoly::int(1);
    let a = unit(3, 1, 2, one.clone());
    let b = unit(3, 2, 3, one.clone());
    assert_eq!(a.mul(&b), unit(3, 1, 3, one));
    assert!(b.mul(&a).is_zero());
}

#[test]
fn words_map_to_matrix_products() {
    let (_, psi) = setup(case(1, 2), BicharMode::SolvedSymbolic);
    let w = FreeElement::monomial(&[1, 2, 0]);
    assert_eq!(psi.apply_e(&w), psi.e[1].mul(&psi.e[2]).mul(&psi.e[0]));
}

#[test]
fn group_images_are_diagonal() {
    for c in Case::test_cases() {
        let (_, psi) = setup(c, BicharMode::SolvedSymbolic);
        assert!(
            psi.k.iter().chain(&psi.l).all(RepMatrix::is_diagonal),
            "{c}"
        );
    }
}

#[test]
fn relations_hold_where_the_assumption_holds() {
    for c in Case::test_cases() {
        for mode in [BicharMode::Hat, BicharMode::SolvedSymbolic] {
            let (bc, psi) = setup(c, mode);
            if !bc.validate_ass(&Lattice::new(c)) {
                continue;
            }
            for chk in check_rep(&psi, &bc) {
                assert_eq!(
                    chk.status,
                    Status::Pass,
                    "{c} {mode}: {} {:?}",
                    chk.id,
                    chk.witness
                );
            }
        }
    }
}

#[test]
fn tau1_hat_violates_the_assumption() {
    for n in [2, 3] {
        let c = case(1, n);
        let bc = Bicharacter::hat(&Lattice::new(c));
        assert!(matches!(
            Psi::checked(c, &bc),
            Err(Error::AssumptionViolated(0))
        ));
        let checks = check_rep(&Psi::new(c, &bc), &bc);
        assert_eq!(checks[0].id, "rep.assumption");
        assert_eq!(checks[0].status, Status::Fail);
    }
}

#[test]
fn grading_twist_scales_by_the_loop_degree() {
    let (_, psi) = setup(case(1, 2), BicharMode::Hat);
    // E_0 carries t, F_0 carries t^-1
    let q = LaurentPoly::var(Var::Q);
    assert_eq!(psi.e[0].twist(1), psi.e[0].scale(&q));
    assert_eq!(psi.f[0].twist(1), psi.f[0].scale(&q.pow(-1)));
    assert_eq!(psi.e[1].twist(1), psi.e[1]);
}

/// Ψ(Z) evaluated entrywise at a rational point, using dense matrices and
/// word-by-word products.
fn dense_psi_z_at(
    psi: &Psi,
    z: &FreeElement,
    point: &dyn Fn(Var) -> Option<GaussRational>,
) -> Vec<Vec<GaussRational>> {
    let n = psi.size;
    let dense = |m: &RepMatrix| {
        let mut d = vec![vec![GaussRational::zero(); n]; n];
        for (&(i, j), c) in m.entries() {
            d[i - 1][j - 1] = c.eval(point).unwrap();
        }
        d
    };
    let gens: Vec<_> = psi.e.iter().map(dense).collect();
    let mul = |a: &Vec<Vec<GaussRational>>, b: &Vec<Vec<GaussRational>>| {
        let mut c = vec![vec![GaussRational::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                if a[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    c[i][j] += &(&a[i][k] * &b[k][j]);
                }
            }
        }
        c
    };
    let mut total = vec![vec![GaussRational::zero(); n]; n];
    for (w, c) in z.terms() {
        let mut m = gens[w[0] as usize].clone();
        for &l in &w[1..] {
            m = mul(&m, &gens[l as usize]);
        }
        let k = c.eval(point).unwrap();
        for i in 0..n {
            for j in 0..n {
                total[i][j] += &(&m[i][j] * &k);
            }
        }
    }
    total
}

#[test]
fn psi_of_z_is_scalar_and_matches_a_dense_evaluation() {
    for c in [case(1, 2), case(2, 2), case(4, 1)] {
        let (bc, psi) = setup(c, BicharMode::SolvedSymbolic);
        let zb = build_z(c, &bc).unwrap();
        let pz = psi_z(&psi, zb.z());
        assert!(pz.pass() && pz.commutes, "{c}");
        let b = pz.b.unwrap();
        let point = |v: Var| {
            let k = match v {
                Var::Q => 3,
                Var::T => 2,
                Var::Z(i) | Var::U(i) => 2 + i as i64,
                Var::P(i, j) => 5 + i as i64 + j as i64,
                Var::X(_) => 1,
            };
            Some(GaussRational::from_frac(k, 7 - (k % 3)))
        };
        let dense = dense_psi_z_at(&psi, zb.z(), &point);
        let bt = b
            .times(&LaurentPoly::var_pow(Var::T, c.s() as i32))
            .eval(&point)
            .unwrap();
        for (i, row) in dense.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let want = if i == j {
                    bt.clone()
                } else {
                    GaussRational::zero()
                };
                assert_eq!(x, &want, "{c} entry ({i},{j})");
            }
        }
    }
}

#[test]
fn tau1_hat_psi_of_z_is_not_scalar() {
    let c = case(1, 2);
    let (bc, psi) = setup(c, BicharMode::Hat);
    let zb = build_z(c, &bc).unwrap();
    assert!(!psi_z(&psi, zb.z()).pass());
}

#[test]
fn classical_limit_needs_the_parity_sign_only_with_odd_mirrors() {
    for c in Case::test_cases() {
        let (_, psi) = setup(c, BicharMode::Hat);
        assert!(classical_limit(&psi, true).pass(), "{c}");
        assert_eq!(classical_limit(&psi, false).pass(), c.tau == 1, "{c}");
    }
}
