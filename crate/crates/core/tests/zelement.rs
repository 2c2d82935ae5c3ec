use zcentral::lattice::{BicharMode, Bicharacter, Lattice};
use zcentral::membership::Method;
use zcentral::report::Status;
use zcentral::zelement::{
    build_z, hopf_ideal_check, root_vector_targets, root_vectors_tau2, tower_targets,
    verify_central, Checker,
};
use zcentral::Case;

fn setup(tau: u8, n: usize, mode: BicharMode) -> (Case, Bicharacter) {
    let c = Case::new(tau, n).unwrap();
    (c, Bicharacter::new(&Lattice::new(c), mode))
}

#[test]
fn z_is_homogeneous_of_the_central_degree() {
    for c in Case::test_cases() {
        let lat = Lattice::new(c);
        for mode in [BicharMode::Hat, BicharMode::SolvedSymbolic] {
            let bc = Bicharacter::new(&lat, mode);
            let zb = build_z(c, &bc).unwrap();
            assert_eq!(zb.z().degree(c.rank()), Some(lat.s_delta()), "{c:?}");
            assert_eq!(zb.b.len(), c.n);
            assert_eq!(zb.b_minus.is_some(), c.tau != 1);
            assert_eq!(zb.coeff_minus.is_some(), c.tau == 4);
        }
    }
}

#[test]
fn tau2_root_vectors_have_the_expected_count() {
    let (c, bc) = setup(2, 2, BicharMode::Hat);
    let rv = root_vectors_tau2(c, &bc).unwrap();
    // ε_i ± ε_j for 1 ≤ i < j ≤ N
    let big_n = c.big_n();
    assert_eq!(rv.len(), big_n * (big_n - 1));
    assert!(rv.values().all(|x| !x.is_zero()));
}

#[test]
fn tau2_root_vector_brackets_vanish() {
    for mode in [BicharMode::Hat, BicharMode::SolvedSymbolic] {
        let (c, bc) = setup(2, 2, mode);
        let targets = root_vector_targets(c, &bc).unwrap();
        assert!(!targets.is_empty());
        let mut chk = Checker::new(c, &bc, Method::Exact, &[]).unwrap();
        for r in chk.check_targets(&targets) {
            assert_eq!(r.status, Status::Pass, "{}", r.name);
        }
    }
}

#[test]
fn tower_brackets_vanish() {
    for (tau, n) in [(1, 2), (2, 2)] {
        let (c, bc) = setup(tau, n, BicharMode::Hat);
        let zb = build_z(c, &bc).unwrap();
        let targets = tower_targets(c, &bc, &zb).unwrap();
        assert!(!targets.is_empty());
        let mut chk = Checker::new(c, &bc, Method::Exact, &[]).unwrap();
        for r in chk.check_targets(&targets) {
            assert_eq!(r.status, Status::Pass, "{c:?} {}", r.name);
        }
    }
}

#[test]
fn z_is_central_modulo_the_relators() {
    for (tau, n) in [(1, 2), (2, 2), (4, 1)] {
        for mode in [BicharMode::Hat, BicharMode::SolvedSymbolic] {
            let (c, bc) = setup(tau, n, mode);
            let zb = build_z(c, &bc).unwrap();
            let mut chk = Checker::new(c, &bc, Method::Exact, &[]).unwrap();
            let res = verify_central(c, &bc, &zb, &mut chk).unwrap();
            assert!(res.len() >= 2 * c.rank());
            for r in &res {
                assert_eq!(r.status, Status::Pass, "{c:?} {mode:?} {}", r.name);
                assert!(r.certificate.is_some());
            }
        }
    }
}

#[test]
fn random_verification_agrees_with_exact() {
    let (c, bc) = setup(2, 2, BicharMode::Hat);
    let zb = build_z(c, &bc).unwrap();
    let method = Method::Random { seed: 3, trials: 2 };
    let mut chk = Checker::new(c, &bc, method, &[3, 4]).unwrap();
    for r in verify_central(c, &bc, &zb, &mut chk).unwrap() {
        assert_eq!(r.status, Status::ProbabilisticPass, "{}", r.name);
        assert_eq!(r.random.len(), 2);
    }
}

#[test]
fn perturbed_z_is_not_central() {
    for (tau, n) in [(1, 2), (2, 2), (4, 1)] {
        let (c, bc) = setup(tau, n, BicharMode::Hat);
        let mut zb = build_z(c, &bc).unwrap();
        let t = zb.a[0].q_bracket(&zb.b[0], &bc).unwrap();
        zb.z = Some(zb.z().plus(&t));
        let mut chk = Checker::new(c, &bc, Method::Exact, &[]).unwrap();
        let res = verify_central(c, &bc, &zb, &mut chk).unwrap();
        assert!(res.iter().any(|r| r.status == Status::Fail), "{c:?}");
    }
}

#[test]
fn z_generates_a_hopf_ideal() {
    for (tau, n) in [(1, 2), (4, 1)] {
        let (c, bc) = setup(tau, n, BicharMode::Hat);
        let mut zb = build_z(c, &bc).unwrap();
        for chk in hopf_ideal_check(c, &bc, &zb).unwrap() {
            assert_eq!(chk.status, Status::Pass, "{c:?} {}", chk.id);
        }
        let t = zb.a[0].q_bracket(&zb.b[0], &bc).unwrap();
        zb.z = Some(zb.z().plus(&t));
        let res = hopf_ideal_check(c, &bc, &zb).unwrap();
        let ideal = res.iter().find(|chk| chk.id == "hopf.ideal").unwrap();
        assert_eq!(ideal.status, Status::Fail, "{c:?}");
    }
}

#[test]
fn targets_over_the_exact_limit_are_skipped() {
    let (c, bc) = setup(1, 2, BicharMode::Hat);
    let zb = build_z(c, &bc).unwrap();
    let mut chk = Checker::new(c, &bc, Method::Exact, &[])
        .unwrap()
        .with_limit(1);
    let results = verify_central(c, &bc, &zb, &mut chk).unwrap();
    assert!(results.iter().any(|r| r.status == Status::Skip));
    assert!(results.iter().all(|r| r.status != Status::Fail));
    assert!(results
        .iter()
        .filter(|r| r.support > 1)
        .all(|r| r.certificate.is_none()));
}
