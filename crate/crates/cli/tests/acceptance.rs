//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Failures listed in `KNOWN_GAPS` are printed as FAIL but do not fail the
//! run; any other failure does, and so does a known gap that stops failing.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use zcentral::lattice::{BicharMode, Bicharacter, Lattice, Weight};
use zcentral::liesuper::roots::{centerless_multiplicities, root_multiplicities};
use zcentral::liesuper::suite::classical_suite;
use zcentral::liesuper::Chevalley;
use zcentral::membership::{pbw_dim, ExactEngine, Method};
use zcentral::quantalg::hopf::antipode;
use zcentral::quantalg::radical::Radical;
use zcentral::quantalg::{
    normal_form, serre_relators, words_of_degree, FreeElement, MixedElement, Strategy,
};
use zcentral::rep::{check_rep, classical_check, psi_z_checks, Psi};
use zcentral::report::{Check, Status};
use zcentral::scalars::{LaurentPoly, RatFunc, Ring};
use zcentral::zelement::{
    build_z, f_side_factors, hopf_ideal_check, root_vector_targets, tower_targets, verify_central,
    Checker, Side,
};
use zcentral::Case;

const MODES: [BicharMode; 2] = [BicharMode::Hat, BicharMode::SolvedSymbolic];
const TRIPLES: usize = 50;
const DIM_HEIGHT: i64 = 6;

/// Items expected to fail, per criterion. Each is explained in the README.
const KNOWN_GAPS: &[(u8, &[&str])] = &[
    (
        2,
        &[
            "(1,2) hat rep.assumption",
            "(1,2) hat rep.k_conjugation",
            "(1,2) hat rep.l_conjugation",
            "(1,2) hat rep.ef",
            "(1,3) hat rep.assumption",
            "(1,3) hat rep.k_conjugation",
            "(1,3) hat rep.l_conjugation",
            "(1,3) hat rep.ef",
        ],
    ),
    (
        3,
        &[
            "(1,2) hat rep.psi_z_scalar",
            "(1,2) hat rep.psi_z_commutes",
            "(1,3) hat rep.psi_z_scalar",
            "(1,3) hat rep.psi_z_commutes",
        ],
    ),
    (
        6,
        &["(1,2) hat [2,1,2,1]", "(1,2) solved-symbolic [2,1,2,1]"],
    ),
];

struct Outcome {
    failures: Vec<String>,
    detail: String,
}

fn bichar(c: Case, mode: BicharMode) -> Bicharacter {
    Bicharacter::new(&Lattice::new(c), mode)
}

fn label(c: Case, mode: BicharMode) -> String {
    format!("({},{}) {}", c.tau, c.n, mode)
}

fn case(tau: u8, n: usize) -> Case {
    Case::new(tau, n).unwrap()
}

fn failing(prefix: &str, checks: &[Check]) -> Vec<String> {
    checks
        .iter()
        .filter(|c| !c.status.is_ok())
        .map(|c| format!("{prefix} {}", c.id))
        .collect()
}

fn classical() -> Outcome {
    let mut failures = Vec::new();
    let mut n = 0;
    for c in Case::test_cases() {
        let checks = classical_suite(c);
        n += checks.len();
        failures.extend(failing(&format!("({},{})", c.tau, c.n), &checks));
    }
    Outcome {
        failures,
        detail: format!("{n} checks over six cases"),
    }
}

fn representation() -> Outcome {
    let mut failures = Vec::new();
    let mut n = 0;
    for c in Case::test_cases() {
        for mode in MODES {
            let bc = bichar(c, mode);
            let psi = Psi::new(c, &bc);
            let mut checks = check_rep(&psi, &bc);
            checks.push(classical_check(&psi));
            n += checks.len();
            failures.extend(failing(&label(c, mode), &checks));
        }
    }
    Outcome {
        failures,
        detail: format!("{n} checks, symbolic z_i, u_i"),
    }
}

fn psi_z() -> Outcome {
    let mut failures = Vec::new();
    for c in Case::test_cases() {
        for mode in MODES {
            let bc = bichar(c, mode);
            let zb = build_z(c, &bc).unwrap();
            let checks = psi_z_checks(&Psi::new(c, &bc), zb.z());
            failures.extend(failing(&label(c, mode), &checks));
        }
    }
    Outcome {
        failures,
        detail: "Ψ(Z) = b·I⊗t^s with b ≠ 0, six cases, both modes".into(),
    }
}

fn central_exact() -> Outcome {
    let mut failures = Vec::new();
    let mut certs = 0;
    for (tau, n) in [(1, 2), (4, 1), (2, 2), (1, 3)] {
        let c = case(tau, n);
        for mode in MODES {
            let bc = bichar(c, mode);
            let zb = build_z(c, &bc).unwrap();
            let mut chk = Checker::new(c, &bc, Method::Exact, &[]).unwrap();
            let results = verify_central(c, &bc, &zb, &mut chk).unwrap();
            // re-expand every certificate in an engine that did not produce it
            let rels = serre_relators(Lattice::new(c).gram(), &bc).unwrap();
            let fresh = ExactEngine::new(&rels, c.rank());
            let z = zb.z();
            for i in 0..c.rank() {
                let mut targets =
                    vec![(Side::E, z.q_bracket(&FreeElement::letter(i), &bc).unwrap())];
                targets.extend(
                    f_side_factors(z, i, &bc)
                        .into_iter()
                        .map(|(_, x)| (Side::F, x)),
                );
                let mine: Vec<_> = results.iter().filter(|r| r.i == Some(i)).collect();
                if mine.len() != targets.len() || !mine.iter().any(|r| r.side == Some(Side::F)) {
                    failures.push(format!(
                        "{} i={i} missing E- or F-side targets",
                        label(c, mode)
                    ));
                    continue;
                }
                for (r, (side, x)) in mine.iter().zip(&targets) {
                    let ok = r.side == Some(*side)
                        && r.status == Status::Pass
                        && r.certificate
                            .as_ref()
                            .is_some_and(|cert| fresh.verify(x, cert));
                    certs += usize::from(ok);
                    if !ok {
                        failures.push(format!("{} {}", label(c, mode), r.name));
                    }
                }
            }
        }
    }
    let mut rand_checks = 0;
    for (tau, n) in [(2, 3), (4, 2)] {
        let c = case(tau, n);
        let bc = bichar(c, BicharMode::SolvedSymbolic);
        let zb = build_z(c, &bc).unwrap();
        let mut chk =
            Checker::new(c, &bc, Method::Random { seed: 1, trials: 5 }, &[1, 2, 3]).unwrap();
        for r in verify_central(c, &bc, &zb, &mut chk).unwrap() {
            rand_checks += 1;
            if r.status != Status::ProbabilisticPass || r.random.len() != 3 {
                failures.push(format!("({tau},{n}) random {}", r.name));
            }
        }
    }
    Outcome {
        failures,
        detail: format!(
            "{certs} re-expanded certificates; {rand_checks} random targets × 3 seeds × 5 trials"
        ),
    }
}

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
        x.add_term(
            w,
            &LaurentPoly::q_pow(rng.gen_range(-2..=2)).times(&LaurentPoly::int(sign)),
        );
    }
    if x.is_zero() {
        FreeElement::monomial(&words[0].iter().map(|&l| l as usize).collect::<Vec<_>>())
    } else {
        x
    }
}

/// X′ = K_λ·S(X), which is again an E-side element.
fn shifted_antipode(x: &FreeElement, bc: &Bicharacter) -> MixedElement {
    let d = x.degree(bc.rank()).unwrap();
    let s = antipode(&MixedElement::from_e_side(x), bc).to_mixed();
    normal_form(&MixedElement::k(d).mul(&s), bc, Strategy::Leftmost).to_mixed()
}

/// The three bracket identities on one random triple; names of the failing ones.
fn identities_hold(x: [&FreeElement; 3], bc: &Bicharacter) -> Vec<&'static str> {
    let r = bc.rank();
    let d = |y: &FreeElement| y.degree(r).unwrap();
    let (l1, l2, l3) = (d(x[0]), d(x[1]), d(x[2]));
    let b = |y: &FreeElement, z: &FreeElement| y.q_bracket(z, bc).unwrap();
    let mut bad = Vec::new();

    let lhs = b(&b(x[0], x[1]), x[2]).minus(&b(x[0], &b(x[1], x[2])));
    let b13 = b(x[0], x[2]);
    let rhs = b13
        .mul(x[1])
        .scale(&bc.chi(&l3, &l2).inv().to_poly())
        .minus(&x[1].mul(&b13).scale(&bc.chi(&l2, &l1).inv().to_poly()));
    if lhs != rhs {
        bad.push("jacobi");
    }

    let s21 = bc.chi(&l2, &l1);
    if s21.mul(&bc.chi(&l1, &l2)).is_one()
        && b(x[1], x[0]) != b(x[0], x[1]).scale(&s21.neg().to_poly())
    {
        bad.push("antisymmetry");
    }

    let nf = |m: &MixedElement| normal_form(m, bc, Strategy::Leftmost);
    let c12 = bc.chi(&l1, &l2);
    let lhs = nf(&antipode(&MixedElement::from_e_side(&b(x[0], x[1])), bc).to_mixed());
    let (p1, p2) = (shifted_antipode(x[0], bc), shifted_antipode(x[1], bc));
    let inner = p2.mul(&p1).minus(&p1.mul(&p2).scale(&c12.inv().to_poly()));
    let rhs = nf(&MixedElement::k(-&(&l1 + &l2))
        .mul(&inner)
        .scale(&c12.to_poly()));
    if lhs != rhs {
        bad.push("antipode");
    }
    bad
}

fn proof_identities() -> Outcome {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for c in Case::test_cases() {
        for mode in MODES {
            let bc = bichar(c, mode);
            for t in 0..TRIPLES {
                let x: Vec<FreeElement> = (0..3)
                    .map(|_| random_homogeneous(&mut rng, c.rank()))
                    .collect();
                for name in identities_hold([&x[0], &x[1], &x[2]], &bc) {
                    failures.push(format!("{} triple {t} {name}", label(c, mode)));
                }
            }
        }
    }
    let mut targets = 0;
    for mode in MODES {
        for (tau, n) in [(2, 2), (1, 2)] {
            let c = case(tau, n);
            let bc = bichar(c, mode);
            let zb = build_z(c, &bc).unwrap();
            let mut list = tower_targets(c, &bc, &zb).unwrap();
            if tau == 2 {
                list.extend(root_vector_targets(c, &bc).unwrap());
            }
            let mut chk = Checker::new(c, &bc, Method::Exact, &[]).unwrap();
            for r in chk.check_targets(&list) {
                targets += 1;
                if r.status != Status::Pass {
                    failures.push(format!("{} {}", label(c, mode), r.name));
                }
            }
        }
    }
    Outcome {
        failures,
        detail: format!("{TRIPLES} triples per case and mode; {targets} tower and root-vector targets certified"),
    }
}

fn dimensions() -> Outcome {
    let mut failures = Vec::new();
    let mut radical_failures = Vec::new();
    let mut weights = 0;
    for (tau, n) in [(1, 2), (2, 2), (4, 1)] {
        let c = case(tau, n);
        let ch = Chevalley::new(c);
        let mults = root_multiplicities(&ch, DIM_HEIGHT);
        let reduced = centerless_multiplicities(&ch, DIM_HEIGHT);
        let top = Weight::from_alpha(vec![DIM_HEIGHT; c.rank()]);
        let lams: Vec<Weight> = top
            .lower_set()
            .into_iter()
            .filter(|w| (1..=DIM_HEIGHT).contains(&w.height()))
            .collect();
        for mode in MODES {
            let bc = bichar(c, mode);
            let mut eng = ExactEngine::new(
                &serre_relators(Lattice::new(c).gram(), &bc).unwrap(),
                c.rank(),
            );
            let conv = |p: &LaurentPoly| RatFunc::from_poly(p.clone());
            let mut rad = Radical::new(&bc, &conv);
            for lam in &lams {
                weights += 1;
                if eng.dim(lam) as u128 != pbw_dim(&mults, lam) {
                    failures.push(format!("{} {lam}", label(c, mode)));
                }
                let comp = rad.component(lam);
                if (comp.free_dim() - comp.dim()) as u128 != pbw_dim(&reduced, lam) {
                    radical_failures.push(format!("{} {lam}", label(c, mode)));
                }
            }
        }
    }
    let radical = if radical_failures.is_empty() {
        "radical quotient = centreless PBW everywhere".to_string()
    } else {
        format!(
            "radical quotient differs at {}",
            radical_failures.join(", ")
        )
    };
    failures.extend(radical_failures.into_iter().map(|s| format!("radical {s}")));
    Outcome {
        failures,
        detail: format!("{weights} weights of height ≤ {DIM_HEIGHT}; {radical}"),
    }
}

fn radical() -> Outcome {
    let mut failures = Vec::new();
    let mut n = 0;
    for (tau, nn) in [(1, 2), (2, 2), (4, 1)] {
        let c = case(tau, nn);
        let lat = Lattice::new(c);
        for mode in MODES {
            let bc = bichar(c, mode);
            let conv = |p: &LaurentPoly| RatFunc::from_poly(p.clone());
            let mut rad = Radical::new(&bc, &conv);
            for rel in serre_relators(lat.gram(), &bc).unwrap() {
                if rel.degree.height() > lat.s_delta_height() {
                    continue;
                }
                n += 1;
                if !rad.contains(&rel.element) {
                    failures.push(format!("{} {}", label(c, mode), rel.name()));
                }
            }
        }
    }
    Outcome {
        failures,
        detail: format!("{n} relators in the radical"),
    }
}

fn hopf() -> Outcome {
    let mut failures = Vec::new();
    for (tau, n) in [(1, 2), (4, 1)] {
        let c = case(tau, n);
        for mode in MODES {
            let bc = bichar(c, mode);
            let zb = build_z(c, &bc).unwrap();
            failures.extend(failing(
                &label(c, mode),
                &hopf_ideal_check(c, &bc, &zb).unwrap(),
            ));
        }
    }
    Outcome {
        failures,
        detail: "Δ(Z) ∈ Z⊗1 + K⊗Z + J⊗U + U⊗J".into(),
    }
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../golden")
}

fn zcentral(args: &[&str]) -> (Vec<u8>, Option<i32>) {
    let out = Command::new(env!("CARGO_BIN_EXE_zcentral"))
        .args(args)
        .output()
        .unwrap();
    (out.stdout, out.status.code())
}

fn reproducibility() -> Outcome {
    let mut failures = Vec::new();
    let random = [
        "verify-z", "--tau", "4", "--n", "1", "--method", "random", "--seeds", "5,6", "--trials",
        "3",
    ];
    let exact = [
        "verify-z",
        "--tau",
        "2",
        "--n",
        "2",
        "--mode",
        "solved-symbolic",
    ];
    for args in [&random[..], &exact[..]] {
        if zcentral(args).0 != zcentral(args).0 {
            failures.push(format!("rerun differs: {}", args.join(" ")));
        }
    }
    let mut cases = BTreeSet::new();
    let mut files = 0;
    for entry in std::fs::read_dir(golden_dir()).unwrap() {
        let dir = entry.unwrap().path();
        cases.insert(dir.file_name().unwrap().to_string_lossy().into_owned());
        for f in std::fs::read_dir(&dir).unwrap() {
            let conf = f.unwrap().path();
            if conf.extension().is_none_or(|e| e != "conf") {
                continue;
            }
            files += 1;
            let stem = conf.file_stem().unwrap().to_string_lossy().into_owned();
            let cmd = stem.split('_').next().unwrap();
            let (got, code) = zcentral(&[cmd, "--config", conf.to_str().unwrap()]);
            let want = std::fs::read(conf.with_extension("json")).unwrap_or_default();
            let name = format!("{}/{stem}", dir.file_name().unwrap().to_string_lossy());
            if got != want {
                failures.push(format!("{name} differs from its golden report"));
                continue;
            }
            let report: Value = serde_json::from_slice(&got).unwrap();
            let all_ok = report["checks"]
                .as_array()
                .unwrap()
                .iter()
                .all(|c| c["status"] != "FAIL");
            if (code == Some(0)) != all_ok {
                failures.push(format!(
                    "{name} exit code {code:?} disagrees with its checks"
                ));
            }
        }
    }
    for c in [
        "tau1_n2", "tau1_n3", "tau2_n2", "tau2_n3", "tau4_n1", "tau4_n2",
    ] {
        if !cases.contains(c) {
            failures.push(format!("no golden reports for {c}"));
        }
    }
    Outcome {
        failures,
        detail: format!("{files} golden reports byte-identical; reruns identical"),
    }
}

struct Criterion {
    id: u8,
    name: &'static str,
    budget: Duration,
    gating: bool,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let mins = |m: u64| Duration::from_secs(60 * m);
    let criteria = [
        Criterion {
            id: 1,
            name: "classical suite",
            budget: Duration::from_secs(30),
            gating: true,
            run: classical,
        },
        Criterion {
            id: 2,
            name: "representation suite",
            budget: mins(2),
            gating: true,
            run: representation,
        },
        Criterion {
            id: 3,
            name: "Ψ(Z) is a nonzero scalar",
            budget: mins(12),
            gating: true,
            run: psi_z,
        },
        Criterion {
            id: 4,
            name: "Z is almost central",
            budget: mins(40),
            gating: true,
            run: central_exact,
        },
        Criterion {
            id: 5,
            name: "bracket identity suite",
            budget: mins(10),
            gating: true,
            run: proof_identities,
        },
        Criterion {
            id: 6,
            name: "quotient dimensions",
            budget: mins(15),
            gating: true,
            run: dimensions,
        },
        Criterion {
            id: 7,
            name: "relators lie in the radical",
            budget: mins(10),
            gating: true,
            run: radical,
        },
        Criterion {
            id: 8,
            name: "Hopf ideal (optional)",
            budget: mins(10),
            gating: false,
            run: hopf,
        },
        Criterion {
            id: 9,
            name: "reproducibility and golden files",
            budget: mins(10),
            gating: true,
            run: reproducibility,
        },
    ];
    let mut ok = true;
    for cr in criteria {
        let start = Instant::now();
        let out = (cr.run)();
        let took = start.elapsed();
        let known: BTreeSet<&str> = KNOWN_GAPS
            .iter()
            .filter(|(id, _)| *id == cr.id)
            .flat_map(|(_, items)| items.iter().copied())
            .collect();
        let got: BTreeSet<&str> = out.failures.iter().map(String::as_str).collect();
        let slow = took > cr.budget;
        let status = if got.is_empty() && !slow {
            "PASS"
        } else {
            "FAIL"
        };
        println!(
            "criterion {}: {status} {} ({}) [{:.1} s, budget {} s]",
            cr.id,
            cr.name,
            out.detail,
            took.as_secs_f64(),
            cr.budget.as_secs()
        );
        let unexpected: Vec<&&str> = got.difference(&known).collect();
        let fixed: Vec<&&str> = known.difference(&got).collect();
        if !got.is_empty() {
            let shown: Vec<&str> = got.iter().take(12).copied().collect();
            println!(
                "    failing: {}{}",
                shown.join("; "),
                if got.len() > 12 { "; ..." } else { "" }
            );
        }
        if !known.is_empty() && unexpected.is_empty() && fixed.is_empty() {
            println!("    known gap, see README");
        }
        if !fixed.is_empty() {
            println!("    known gap no longer fails, update the list: {fixed:?}");
        }
        if slow {
            println!("    over the time budget");
        }
        if cr.gating && (!unexpected.is_empty() || !fixed.is_empty() || slow) {
            ok = false;
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
