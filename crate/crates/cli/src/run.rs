//! One report per subcommand.

use std::collections::BTreeMap;

use clap::ValueEnum;
use serde_json::json;
use zcentral::discrepancy;
use zcentral::lattice::{Bicharacter, Lattice, Weight};
use zcentral::liesuper::roots::{centerless_multiplicities, root_multiplicities};
use zcentral::liesuper::suite::classical_suite;
use zcentral::liesuper::Chevalley;
use zcentral::membership::{pbw_dim, ExactEngine};
use zcentral::quantalg::radical::Radical;
use zcentral::quantalg::{serre_relators, Relator};
use zcentral::rep::{check_rep, classical_check, psi_z_checks, Psi};
use zcentral::report::{Check, Report, Status};
use zcentral::scalars::{LaurentPoly, RatFunc};
use zcentral::zelement::{build_z, hopf_ideal_check, verify_central, Checker, TargetResult};

use crate::config::{CaseConfig, ConfigError, MethodKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Classical realization: relations, automorphisms, central family
    Classical,
    /// Vector representation relations and the q → 1 comparison
    Rep,
    /// Build Z and serialize its towers
    BuildZ,
    /// Certify ZF_i − F_iZ = ⟦Z, E_i⟧ = 0 and check Ψ(Z)
    VerifyZ,
    /// Quotient dimensions against the PBW count
    Dims,
    /// Serre relators against the radical
    Radical,
    /// Δ(Z) against the Hopf ideal condition
    Hopf,
    /// The list of printed formulas that were read differently
    ReportDiscrepancies,
}

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Core(#[from] zcentral::Error),
}

pub fn run(cmd: Command, cfg: &CaseConfig) -> Result<Report, RunError> {
    cfg.validate()?;
    let case = cfg.case()?;
    let mut report = Report::new(case, cfg.mode.to_string(), cfg.report_seed());
    report.discrepancies = discrepancy::for_tau(case.tau);
    match cmd {
        Command::Classical => report.extend(classical_suite(case)),
        Command::Rep => {
            let bc = cfg.bichar()?;
            let psi = Psi::new(case, &bc);
            report.extend(check_rep(&psi, &bc));
            report.push(classical_check(&psi));
        }
        Command::BuildZ => {
            let bc = cfg.bichar()?;
            let zb = build_z(case, &bc)?;
            report.push(
                Check::new(
                    "z.build",
                    "the towers and Z have their stated multidegrees",
                    Status::Pass,
                )
                .with_data(json!({ "support": zb.z().len(), "bundle": zb })),
            );
        }
        Command::VerifyZ => report.extend(verify_z(cfg, &cfg.bichar()?)?),
        Command::Dims => report.extend(dims(cfg, &cfg.bichar()?)?),
        Command::Radical => report.extend(radical(cfg, &cfg.bichar()?)?),
        Command::Hopf => {
            let bc = cfg.bichar()?;
            let zb = build_z(case, &bc)?;
            report.extend(hopf_ideal_check(case, &bc, &zb)?);
        }
        Command::ReportDiscrepancies => report.discrepancies = discrepancy::all(),
    }
    Ok(report)
}

fn verify_z(cfg: &CaseConfig, bc: &Bicharacter) -> Result<Vec<Check>, RunError> {
    let case = cfg.case()?;
    let zb = build_z(case, bc)?;
    let mut checker = Checker::new(case, bc, cfg.membership_method(), &cfg.seeds)?
        .with_limit(cfg.exact_word_limit);
    let results = verify_central(case, bc, &zb, &mut checker)?;
    let mut out: Vec<Check> = results.into_iter().map(|r| target_check(r, cfg)).collect();
    out.extend(psi_z_checks(&Psi::new(case, bc), zb.z()));
    Ok(out)
}

fn target_check(r: TargetResult, cfg: &CaseConfig) -> Check {
    let statement = match r.side {
        Some(zcentral::zelement::Side::F) => {
            "this E-side factor of ZF_i − F_iZ lies in the Serre ideal"
        }
        _ => "⟦Z, E_i⟧ lies in the Serre ideal",
    };
    let mut data = json!({ "i": r.i, "support": r.support });
    if let Some(c) = &r.certificate {
        data["certificate_terms"] = json!(c.len());
        if cfg.certificates {
            data["certificate"] = json!(c);
        }
    }
    if !r.random.is_empty() {
        data["random"] = json!(r.random);
    }
    let status = r.status;
    let mut chk = Check::new(format!("z.central {}", r.name), statement, status).with_data(data);
    if status == Status::Skip {
        chk = chk.with_witness(format!(
            "support {} exceeds the exact limit of {} words; use method=random",
            r.support, cfg.exact_word_limit
        ));
    }
    if cfg.method == MethodKind::Exact && status == Status::Fail {
        chk = chk.with_witness("no certificate: the element is nonzero in the quotient");
    }
    chk
}

fn relators(lat: &Lattice, bc: &Bicharacter) -> Result<Vec<Relator>, RunError> {
    Ok(serre_relators(lat.gram(), bc)?)
}

/// Every λ ≥ 0 with 1 ≤ height(λ) ≤ h, ordered by height.
fn weights_up_to(rank: usize, h: i64) -> Vec<Weight> {
    let top = Weight::from_alpha(vec![h; rank]);
    let mut out: Vec<Weight> = top
        .lower_set()
        .into_iter()
        .filter(|w| (1..=h).contains(&w.height()))
        .collect();
    out.sort_by_key(|w| (w.height(), w.clone()));
    out
}

fn dims(cfg: &CaseConfig, bc: &Bicharacter) -> Result<Vec<Check>, RunError> {
    let case = cfg.case()?;
    let lat = Lattice::new(case);
    let h = cfg.height.unwrap_or_else(|| lat.s_delta_height());
    let ch = Chevalley::new(case);
    let mults = root_multiplicities(&ch, h);
    let reduced = centerless_multiplicities(&ch, h);
    let mut eng = ExactEngine::new(&relators(&lat, bc)?, case.rank());
    let conv = |p: &LaurentPoly| RatFunc::from_poly(p.clone());
    let mut rad = Radical::new(bc, &conv);
    let mut rows = Vec::new();
    let mut bad = Vec::new();
    let mut bad_radical = Vec::new();
    for lam in weights_up_to(case.rank(), h) {
        let q = eng.dim(&lam) as u128;
        let p = pbw_dim(&mults, &lam);
        let component = rad.component(&lam);
        let u = (component.free_dim() - component.dim()) as u128;
        let pr = pbw_dim(&reduced, &lam);
        if q != p {
            bad.push(lam.to_string());
        }
        if u != pr {
            bad_radical.push(lam.to_string());
        }
        rows.push(json!({
            "lambda": lam.alpha,
            "quotient_dim": q,
            "pbw_dim": p,
            "equal": q == p,
            "radical_quotient_dim": u,
            "centerless_pbw_dim": pr,
            "radical_equal": u == pr,
        }));
    }
    let serre = Check::pass_if(
        "dims.pbw",
        "dim of the Serre relator quotient at λ equals the PBW count from the classical root multiplicities",
        bad.is_empty(),
    )
    .with_data(json!({ "height": h, "table": rows }))
    .witness_on_fail(|| format!("differs at {}", bad.join(", ")));
    let radical = Check::pass_if(
        "dims.radical",
        "dim of the radical quotient at λ equals the PBW count of n⁺ modulo the central Z_k",
        bad_radical.is_empty(),
    )
    .witness_on_fail(|| format!("differs at {}", bad_radical.join(", ")));
    Ok(vec![serre, radical])
}

fn radical(cfg: &CaseConfig, bc: &Bicharacter) -> Result<Vec<Check>, RunError> {
    let case = cfg.case()?;
    let lat = Lattice::new(case);
    let h = cfg.height.unwrap_or_else(|| lat.s_delta_height());
    let conv = |p: &LaurentPoly| RatFunc::from_poly(p.clone());
    let mut rad = Radical::new(bc, &conv);
    let r = case.rank();
    let degree_one = (0..r).all(|i| rad.component(&Weight::simple(r, i)).dim() == 0);
    let mut rows = Vec::new();
    let mut missing = Vec::new();
    for rel in relators(&lat, bc)? {
        if rel.degree.height() > h {
            continue;
        }
        let ok = rad.contains(&rel.element);
        if !ok {
            missing.push(rel.name());
        }
        rows.push(json!({ "relator": rel.name(), "degree": rel.degree.alpha, "in_radical": ok }));
    }
    let dims: BTreeMap<String, usize> = weights_up_to(r, 2)
        .into_iter()
        .map(|w| (w.to_string(), rad.component(&w).dim()))
        .collect();
    Ok(vec![
        Check::pass_if(
            "radical.degree_one",
            "the radical has no elements of degree α_i",
            degree_one,
        ),
        Check::pass_if(
            "radical.relators",
            "every Serre relator lies in the radical at its multidegree",
            missing.is_empty(),
        )
        .with_data(json!({ "height": h, "relators": rows, "low_dims": dims }))
        .witness_on_fail(|| format!("not in the radical: {}", missing.join(", "))),
    ])
}
