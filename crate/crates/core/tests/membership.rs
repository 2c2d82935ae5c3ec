use std::collections::BTreeMap;

use zcentral::lattice::{BicharMode, Bicharacter, Lattice, Weight};
use zcentral::liesuper::roots::{centerless_multiplicities, root_multiplicities};
use zcentral::liesuper::Chevalley;
use zcentral::membership::{
    ideal_component, member, pbw_dim, quotient_dim, ExactEngine, Method, RandomEngine,
    TrialOutcome, Verdict,
};
use zcentral::quantalg::radical::Radical;
use zcentral::quantalg::{serre_relators, words_of_degree, FreeElement, Relator};
use zcentral::scalars::{rank, LaurentPoly, RatFunc, Var};
use zcentral::Case;

fn setup(tau: u8, n: usize, mode: BicharMode) -> (Case, Bicharacter, Vec<Relator>) {
    let c = Case::new(tau, n).unwrap();
    let lat = Lattice::new(c);
    let bc = Bicharacter::new(&lat, mode);
    let rels = serre_relators(lat.gram(), &bc).unwrap();
    (c, bc, rels)
}

fn vars(bc: &Bicharacter) -> Vec<Var> {
    let mut v = vec![Var::Q];
    v.extend(bc.parameters());
    v
}

/// Free dimension minus the rank of every sandwich u·r·v, by dense elimination.
fn dense_quotient_dim(rels: &[Relator], lam: &Weight) -> usize {
    let words = words_of_degree(lam);
    let rows: Vec<Vec<RatFunc>> = ideal_component(rels, lam)
        .iter()
        .map(|x| {
            words
                .iter()
                .map(|w| {
                    RatFunc::from_poly(x.coeff(w).cloned().unwrap_or_else(|| LaurentPoly::int(0)))
                })
                .collect()
        })
        .collect();
    words.len() - if rows.is_empty() { 0 } else { rank(&rows) }
}

fn weights_up_to(r: usize, height: i64) -> Vec<Weight> {
    let top = Weight::from_alpha(vec![2; r]);
    top.lower_set()
        .into_iter()
        .filter(|w| !w.is_zero() && w.height() <= height)
        .collect()
}

#[test]
fn each_relator_certifies_itself() {
    for (tau, n) in [(1, 2), (2, 2), (4, 1)] {
        let (_, _, rels) = setup(tau, n, BicharMode::Hat);
        let r = rels[0].degree.rank();
        let mut eng = ExactEngine::new(&rels, r);
        for rel in &rels {
            let cert = eng.certify(&rel.element).expect("relator is a member");
            assert!(eng.verify(&rel.element, &cert));
            assert!(!cert.is_empty());
        }
    }
}

#[test]
fn single_generators_and_their_products_are_not_members() {
    let (c, _, rels) = setup(2, 2, BicharMode::Hat);
    let r = c.rank();
    let mut eng = ExactEngine::new(&rels, r);
    for i in 0..r {
        assert!(eng.certify(&FreeElement::letter(i)).is_none());
    }
    assert!(matches!(
        member(&FreeElement::monomial(&[0, 1]), &rels, r, Method::Exact),
        Verdict::NotMember
    ));
}

#[test]
fn sandwiched_relators_are_members() {
    let (c, _, rels) = setup(1, 2, BicharMode::SolvedSymbolic);
    let r = c.rank();
    let mut eng = ExactEngine::new(&rels, r);
    let mut perturbed = 0;
    for rel in &rels {
        let x = FreeElement::letter(1)
            .mul(&rel.element)
            .mul(&FreeElement::letter(3))
            .scale(&LaurentPoly::q_pow(3));
        let cert = eng.certify(&x).expect("member");
        assert!(eng.verify(&x, &cert));
        let deg = x.degree(r).unwrap();
        let q = eng.quotient();
        q.ensure(&deg);
        if let Some(w) = q.standard_words(&deg).first() {
            let y = x.plus(&FreeElement::word(w.clone(), LaurentPoly::int(1)));
            assert!(eng.certify(&y).is_none());
            perturbed += 1;
        }
    }
    assert!(perturbed > 0);
}

#[test]
fn quotient_dimension_matches_dense_elimination() {
    for (tau, n) in [(1, 2), (2, 2), (4, 1)] {
        let (c, _, rels) = setup(tau, n, BicharMode::Hat);
        for lam in weights_up_to(c.rank(), 4) {
            assert_eq!(
                quotient_dim(&rels, c.rank(), &lam),
                dense_quotient_dim(&rels, &lam),
                "{c:?} {lam}"
            );
        }
    }
}

#[test]
fn quotient_dimension_matches_the_pbw_count() {
    for (tau, n) in [(1, 3), (2, 2), (4, 1)] {
        let (c, _, rels) = setup(tau, n, BicharMode::SolvedSymbolic);
        let mults: BTreeMap<_, _> = root_multiplicities(&Chevalley::new(c), 5);
        let mut eng = ExactEngine::new(&rels, c.rank());
        for lam in weights_up_to(c.rank(), 5) {
            assert_eq!(eng.dim(&lam) as u128, pbw_dim(&mults, &lam), "{c:?} {lam}");
        }
    }
}

#[test]
fn radical_quotient_matches_the_centerless_pbw_count() {
    for (tau, n) in [(1, 2), (4, 1)] {
        let (c, bc, _) = setup(tau, n, BicharMode::Hat);
        let ch = Chevalley::new(c);
        let reduced = centerless_multiplicities(&ch, 6);
        let full = root_multiplicities(&ch, 6);
        let delta = Lattice::new(c).s_delta();
        assert_eq!(reduced[&delta].even + 1, full[&delta].even, "{c:?}");
        let conv = |p: &LaurentPoly| RatFunc::from_poly(p.clone());
        let mut rad = Radical::new(&bc, &conv);
        for lam in weights_up_to(c.rank(), 6) {
            let comp = rad.component(&lam);
            let u = (comp.free_dim() - comp.dim()) as u128;
            assert_eq!(u, pbw_dim(&reduced, &lam), "{c:?} {lam}");
        }
    }
}

#[test]
fn serre_quotient_keeps_z_which_the_radical_kills() {
    let (c, bc, rels) = setup(1, 2, BicharMode::Hat);
    let delta = Lattice::new(c).s_delta();
    let conv = |p: &LaurentPoly| RatFunc::from_poly(p.clone());
    let mut rad = Radical::new(&bc, &conv);
    let comp = rad.component(&delta);
    assert_eq!(
        quotient_dim(&rels, c.rank(), &delta),
        comp.free_dim() - comp.dim() + 1
    );
}

#[test]
fn random_membership_agrees_with_exact() {
    let (c, bc, rels) = setup(2, 2, BicharMode::Hat);
    let r = c.rank();
    let mut exact = ExactEngine::new(&rels, r);
    let mut random = RandomEngine::new(&rels, r, &vars(&bc), 5, 3);
    let mut xs: Vec<FreeElement> = rels.iter().map(|x| x.element.clone()).collect();
    xs.push(FreeElement::monomial(&[0, 1]));
    xs.push(
        FreeElement::letter(2)
            .mul(&rels[1].element)
            .minus(&FreeElement::monomial(&[2, 0, 2])),
    );
    for x in xs.iter().filter(|x| x.degree(r).is_some()) {
        let v = random.test(x);
        assert!(v
            .trials
            .iter()
            .all(|t| t.outcome != TrialOutcome::Indeterminate));
        assert_eq!(v.all_zero(), exact.contains(x), "{x}");
        assert!(v.failure_bound < 1e-9);
    }
}

#[test]
fn quotient_dimensions_do_not_depend_on_the_random_point() {
    let (c, bc, rels) = setup(4, 1, BicharMode::Hat);
    let r = c.rank();
    let mut exact = ExactEngine::new(&rels, r);
    let mut random = RandomEngine::new(&rels, r, &vars(&bc), 99, 3);
    let weights = weights_up_to(r, 4);
    let want: Vec<usize> = weights.iter().map(|w| exact.dim(w)).collect();
    let mut count = 0;
    for q in random.quotients() {
        let got: Vec<usize> = weights.iter().map(|w| q.dim(w)).collect();
        assert_eq!(got, want);
        count += 1;
    }
    assert_eq!(count, 3);
}
