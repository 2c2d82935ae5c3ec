use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zcentral::lattice::{BicharMode, Bicharacter, Lattice, Weight};
use zcentral::membership::quotient_dim;
use zcentral::quantalg::hopf::{
    antipode, antipode_convolution, coproduct, counit, counit_left, counit_right,
};
use zcentral::quantalg::radical::Radical;
use zcentral::quantalg::{
    normal_form, serre_relators, words_of_degree, FreeElement, Letter, MixedElement, NormalElement,
    Strategy,
};
use zcentral::scalars::{LaurentPoly, RatFunc, Ring};
use zcentral::Case;

const TRIPLES: usize = 60;

fn bichars() -> Vec<(Case, Bicharacter)> {
    let mut out = Vec::new();
    for c in Case::test_cases() {
        let lat = Lattice::new(c);
        for mode in [BicharMode::Hat, BicharMode::SolvedSymbolic] {
            out.push((c, Bicharacter::new(&lat, mode)));
        }
    }
    out
}

fn nf(x: &MixedElement, bc: &Bicharacter) -> NormalElement {
    normal_form(x, bc, Strategy::Leftmost)
}

/// A homogeneous E-side element: a few words of one random degree with
/// coefficients ±q^k.
fn random_homogeneous(rng: &mut ChaCha8Rng, rank: usize) -> FreeElement {
    let len = rng.gen_range(1..=2);
    let alpha = (0..len).fold(Weight::zero(rank), |w, _| {
        w.plus_simple(rng.gen_range(0..rank), 1)
    });
    let words = words_of_degree(&alpha);
    let mut x = FreeElement::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let w = words[rng.gen_range(0..words.len())].clone();
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let c = LaurentPoly::q_pow(rng.gen_range(-2..=2)).times(&LaurentPoly::int(sign));
        x.add_term(w, &c);
    }
    if x.is_zero() {
        FreeElement::monomial(&words[0].iter().map(|&l| l as usize).collect::<Vec<_>>())
    } else {
        x
    }
}

fn deg(x: &FreeElement, bc: &Bicharacter) -> Weight {
    x.degree(bc.rank()).unwrap()
}

/// X·Y − k·Y·X written out by hand, with k = χ(μ, λ)⁻¹.
fn bracket_by_hand(x: &FreeElement, y: &FreeElement, bc: &Bicharacter) -> FreeElement {
    let k = bc.chi(&deg(y, bc), &deg(x, bc)).inv().to_poly();
    x.mul(y).minus(&y.mul(x).scale(&k))
}

#[test]
fn e_and_f_with_different_indices_commute() {
    let c = Case::new(2, 2).unwrap();
    let bc = Bicharacter::new(&Lattice::new(c), BicharMode::Hat);
    let x = MixedElement::e(1).mul(&MixedElement::f(2));
    let want = nf(&MixedElement::f(2).mul(&MixedElement::e(1)), &bc);
    assert_eq!(nf(&x, &bc), want);
    assert_eq!(want.len(), 1);
}

#[test]
fn e_f_with_equal_index_produces_the_group_difference() {
    let c = Case::new(1, 2).unwrap();
    let bc = Bicharacter::new(&Lattice::new(c), BicharMode::Hat);
    let r = bc.rank();
    let x = MixedElement::e(0).mul(&MixedElement::f(0));
    let want = MixedElement::f(0)
        .mul(&MixedElement::e(0))
        .minus(&MixedElement::k(Weight::simple(r, 0)))
        .plus(&MixedElement::l(Weight::simple(r, 0)));
    assert_eq!(nf(&x, &bc), nf(&want, &bc));
    assert_eq!(nf(&x, &bc).len(), 3);
}

#[test]
fn group_letters_pass_e_with_the_bicharacter() {
    for (_, bc) in bichars() {
        let r = bc.rank();
        let a = &Weight::simple(r, 0) + &Weight::partial(r);
        for i in 0..r {
            let lhs = MixedElement::k(a.clone()).mul(&MixedElement::e(i));
            let c = bc.chi(&a, &Weight::simple(r, i)).to_poly();
            let rhs = MixedElement::e(i)
                .mul(&MixedElement::k(a.clone()))
                .scale(&c);
            assert_eq!(nf(&lhs, &bc), nf(&rhs, &bc));
            let lhs = MixedElement::l(a.clone()).mul(&MixedElement::f(i));
            let c = bc.chi(&Weight::simple(r, i), &a).to_poly();
            let rhs = MixedElement::f(i)
                .mul(&MixedElement::l(a.clone()))
                .scale(&c);
            assert_eq!(nf(&lhs, &bc), nf(&rhs, &bc));
        }
    }
}

#[test]
fn leftmost_and_rightmost_rewriting_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (_, bc) in bichars() {
        let r = bc.rank();
        for _ in 0..20 {
            let mut w = Vec::new();
            for _ in 0..rng.gen_range(2..=6) {
                let i = rng.gen_range(0..r) as u8;
                w.push(match rng.gen_range(0..3) {
                    0 => Letter::E(i),
                    1 => Letter::F(i),
                    _ => Letter::G(Weight::simple(r, i as usize), Weight::zero(r)),
                });
            }
            let x = MixedElement::from_word(w, LaurentPoly::int(1));
            let a = normal_form(&x, &bc, Strategy::Leftmost);
            let b = normal_form(&x, &bc, Strategy::Rightmost);
            assert_eq!(a, b);
        }
    }
}

#[test]
fn bracket_matches_the_hand_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (_, bc) in bichars() {
        for _ in 0..TRIPLES {
            let x = random_homogeneous(&mut rng, bc.rank());
            let y = random_homogeneous(&mut rng, bc.rank());
            assert_eq!(x.q_bracket(&y, &bc).unwrap(), bracket_by_hand(&x, &y, &bc));
        }
    }
}

#[test]
fn nested_brackets_differ_by_the_jacobi_defect() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for (c, bc) in bichars() {
        for _ in 0..TRIPLES {
            let x1 = random_homogeneous(&mut rng, bc.rank());
            let x2 = random_homogeneous(&mut rng, bc.rank());
            let x3 = random_homogeneous(&mut rng, bc.rank());
            let (l1, l2, l3) = (deg(&x1, &bc), deg(&x2, &bc), deg(&x3, &bc));
            let b = |x: &FreeElement, y: &FreeElement| x.q_bracket(y, &bc).unwrap();
            let lhs = b(&b(&x1, &x2), &x3).minus(&b(&x1, &b(&x2, &x3)));
            let b13 = b(&x1, &x3);
            let c21 = bc.chi(&l2, &l1).inv().to_poly();
            let c32 = bc.chi(&l3, &l2).inv().to_poly();
            let rhs = b13.mul(&x2).scale(&c32).minus(&x2.mul(&b13).scale(&c21));
            assert_eq!(lhs, rhs, "{c:?}");
        }
    }
}

#[test]
fn bracket_is_antisymmetric_when_the_bicharacter_is_symmetric_on_the_pair() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for (c, bc) in bichars() {
        let mut seen = 0;
        for _ in 0..20 * TRIPLES {
            let x1 = random_homogeneous(&mut rng, bc.rank());
            let x2 = random_homogeneous(&mut rng, bc.rank());
            let (l1, l2) = (deg(&x1, &bc), deg(&x2, &bc));
            let s21 = bc.chi(&l2, &l1);
            if !s21.mul(&bc.chi(&l1, &l2)).is_one() {
                continue;
            }
            seen += 1;
            let lhs = x2.q_bracket(&x1, &bc).unwrap();
            let rhs = x1.q_bracket(&x2, &bc).unwrap().scale(&s21.neg().to_poly());
            assert_eq!(lhs, rhs, "{c:?}");
            if seen == TRIPLES {
                break;
            }
        }
        assert_eq!(seen, TRIPLES, "{c:?}: too few symmetric pairs");
    }
}

/// X′ = K_λ · S(X), again an E-side element.
fn shifted_antipode(x: &FreeElement, bc: &Bicharacter) -> MixedElement {
    let s = antipode(&MixedElement::from_e_side(x), bc).to_mixed();
    let y = nf(&MixedElement::k(deg(x, bc)).mul(&s), bc);
    for (key, _) in y.terms() {
        assert!(key.f.is_empty() && key.k.is_zero() && key.l.is_zero());
    }
    y.to_mixed()
}

#[test]
fn antipode_reverses_brackets() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for (c, bc) in bichars() {
        for _ in 0..TRIPLES {
            let x1 = random_homogeneous(&mut rng, bc.rank());
            let x2 = random_homogeneous(&mut rng, bc.rank());
            let (l1, l2) = (deg(&x1, &bc), deg(&x2, &bc));
            let lhs = antipode(
                &MixedElement::from_e_side(&x1.q_bracket(&x2, &bc).unwrap()),
                &bc,
            );
            let (y1, y2) = (shifted_antipode(&x1, &bc), shifted_antipode(&x2, &bc));
            let chi12 = bc.chi(&l1, &l2);
            let inner = y2
                .mul(&y1)
                .minus(&y1.mul(&y2).scale(&chi12.inv().to_poly()));
            let rhs = MixedElement::k(-&(&l1 + &l2))
                .mul(&inner)
                .scale(&chi12.to_poly());
            assert_eq!(lhs, nf(&rhs, &bc), "{c:?}");
        }
    }
}

fn generators(r: usize) -> Vec<MixedElement> {
    let a = &Weight::simple(r, 0) - &Weight::partial(r);
    let mut out = vec![MixedElement::k(a.clone()), MixedElement::l(a)];
    for i in 0..r {
        out.push(MixedElement::e(i));
        out.push(MixedElement::f(i));
    }
    out
}

#[test]
fn coproduct_of_generators_has_the_stated_form() {
    let c = Case::new(2, 2).unwrap();
    let bc = Bicharacter::new(&Lattice::new(c), BicharMode::Hat);
    let r = bc.rank();
    let words = |x: &MixedElement| -> Vec<(Vec<Letter>, Vec<Letter>)> {
        let mut w: Vec<_> = coproduct(x, &bc)
            .keys()
            .map(|(u, v)| (u.to_word(), v.to_word()))
            .collect();
        w.sort();
        w
    };
    for i in 0..r {
        let ai = Weight::simple(r, i);
        let z = Weight::zero(r);
        let (e, f) = (Letter::E(i as u8), Letter::F(i as u8));
        let mut want = vec![
            (vec![e.clone()], vec![]),
            (vec![Letter::G(ai.clone(), z.clone())], vec![e]),
        ];
        want.sort();
        assert_eq!(words(&MixedElement::e(i)), want);
        let mut want = vec![(vec![f.clone()], vec![Letter::G(z, ai)]), (vec![], vec![f])];
        want.sort();
        assert_eq!(words(&MixedElement::f(i)), want);
    }
}

#[test]
fn hopf_axioms_hold_on_generators_and_short_words() {
    for (c, bc) in bichars() {
        let r = bc.rank();
        let mut xs = generators(r);
        xs.push(MixedElement::e(0).mul(&MixedElement::f(r - 1)));
        xs.push(
            MixedElement::f(1)
                .mul(&MixedElement::e(1))
                .mul(&MixedElement::e(0)),
        );
        for x in &xs {
            let d = coproduct(x, &bc);
            assert_eq!(counit_left(&d, &bc), nf(x, &bc), "{c:?}");
            assert_eq!(counit_right(&d, &bc), nf(x, &bc), "{c:?}");
            let want = nf(&MixedElement::one().scale(&counit(x)), &bc);
            assert_eq!(antipode_convolution(x, &bc), want, "{c:?}");
        }
    }
}

#[test]
fn radical_is_zero_in_degree_one_and_contains_the_relators() {
    for (c, bc) in bichars() {
        let lat = Lattice::new(c);
        let conv = |p: &LaurentPoly| RatFunc::from_poly(p.clone());
        let mut rad = Radical::new(&bc, &conv);
        for i in 0..bc.rank() {
            assert_eq!(rad.component(&Weight::simple(bc.rank(), i)).dim(), 0);
        }
        let rels = serre_relators::<LaurentPoly>(lat.gram(), &bc).unwrap();
        assert!(!rels.is_empty());
        for r in rels.iter().filter(|r| r.degree.height() <= 3) {
            assert!(rad.contains(&r.element), "{c:?} {}", r.name());
        }
    }
}

#[test]
fn radical_codimension_matches_the_relator_quotient() {
    for (c, bc) in bichars()
        .into_iter()
        .filter(|(c, _)| c.tau != 4 || c.n == 1)
    {
        let lat = Lattice::new(c);
        let rels = serre_relators::<LaurentPoly>(lat.gram(), &bc).unwrap();
        let conv = |p: &LaurentPoly| RatFunc::from_poly(p.clone());
        let mut rad = Radical::new(&bc, &conv);
        let r = bc.rank();
        let lam = (0..3).fold(Weight::zero(r), |w, i| w.plus_simple(i % r, 1));
        let comp = rad.component(&lam);
        let codim = comp.free_dim() - comp.dim();
        assert_eq!(codim, quotient_dim(&rels, r, &lam), "{c:?}");
    }
}
