use serde::Serialize;

use crate::case::Case;
use crate::error::Result;
use crate::lattice::{Bicharacter, Weight};
use crate::membership::{
    Certificate, ExactEngine, Method, RandomEngine, RandomVerdict, EXACT_WORD_LIMIT,
};
use crate::quantalg::{normal_form, serre_relators, FreeElement, MixedElement, Relator, Strategy};
use crate::report::Status;
use crate::scalars::Var;

use super::identities::Target;
use super::ZBundle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    E,
    F,
}

/// Verdict on one element that must vanish modulo the Serre relators.
#[derive(Clone, Debug, Serialize)]
pub struct TargetResult {
    pub name: String,
    pub i: Option<usize>,
    pub side: Option<Side>,
    pub support: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub random: Vec<RandomVerdict>,
}

/// Membership of many targets, against one set of relators.
pub enum Checker {
    /// Targets with more than `limit` words are skipped.
    Exact {
        engine: ExactEngine,
        limit: usize,
    },
    Random(Vec<RandomEngine>),
}

impl Checker {
    /// `seeds` is only used by the random method: one engine per seed.
    pub fn new(case: Case, bc: &Bicharacter, method: Method, seeds: &[u64]) -> Result<Self> {
        let relators: Vec<Relator> = serre_relators(&gram(case), bc)?;
        Ok(match method {
            Method::Exact => Checker::Exact {
                engine: ExactEngine::new(&relators, case.rank()),
                limit: EXACT_WORD_LIMIT,
            },
            Method::Random { seed, trials } => {
                let mut vars = vec![Var::Q];
                vars.extend(bc.parameters());
                let list: Vec<u64> = if seeds.is_empty() {
                    vec![seed]
                } else {
                    seeds.to_vec()
                };
                Checker::Random(
                    list.iter()
                        .map(|&s| RandomEngine::new(&relators, case.rank(), &vars, s, trials))
                        .collect(),
                )
            }
        })
    }

    /// Change the support limit of an exact checker.
    pub fn with_limit(mut self, words: usize) -> Self {
        if let Checker::Exact { limit, .. } = &mut self {
            *limit = words;
        }
        self
    }

    pub fn check(&mut self, name: String, x: &FreeElement) -> TargetResult {
        let mut res = TargetResult {
            name,
            i: None,
            side: None,
            support: x.len(),
            status: Status::Fail,
            certificate: None,
            random: Vec::new(),
        };
        match self {
            Checker::Exact { limit, .. } if x.len() > *limit => {
                res.status = Status::Skip;
            }
            Checker::Exact { engine, .. } => {
                res.certificate = engine.certify(x);
                res.status = Status::from_bool(res.certificate.is_some());
            }
            Checker::Random(engines) => {
                res.random = engines.iter_mut().map(|e| e.test(x)).collect();
                if res.random.iter().all(|v| v.all_zero()) {
                    res.status = Status::ProbabilisticPass;
                }
            }
        }
        res
    }

    pub fn check_targets(&mut self, targets: &[Target]) -> Vec<TargetResult> {
        targets
            .iter()
            .map(|t| self.check(t.name.clone(), &t.element))
            .collect()
    }
}

fn gram(case: Case) -> Vec<Vec<i64>> {
    crate::lattice::Lattice::new(case).gram().to_vec()
}

/// Per i: ⟦Z, E_i⟧ and the E-side factors of the normal form of
/// ZF_i − F_iZ, each checked against the Serre relator ideal.
pub fn verify_central(
    case: Case,
    bc: &Bicharacter,
    zb: &ZBundle,
    checker: &mut Checker,
) -> Result<Vec<TargetResult>> {
    let z = zb.z();
    let mut out = Vec::new();
    for i in 0..case.rank() {
        let ez = z.q_bracket(&FreeElement::letter(i), bc)?;
        let mut r = checker.check(format!("[Z,E{i}]"), &ez);
        r.i = Some(i);
        r.side = Some(Side::E);
        out.push(r);
        for (block, factor) in f_side_factors(z, i, bc) {
            let mut r = checker.check(format!("ZF{i}-F{i}Z @ {block}"), &factor);
            r.i = Some(i);
            r.side = Some(Side::F);
            out.push(r);
        }
    }
    Ok(out)
}

/// normal_form(ZF_i − F_iZ) grouped by its F·K·L block; each block's E-side
/// factor is returned with a label for the block.
pub fn f_side_factors(z: &FreeElement, i: usize, bc: &Bicharacter) -> Vec<(String, FreeElement)> {
    let zm = MixedElement::from_e_side(z);
    let f = MixedElement::f(i);
    let comm = zm.mul(&f).minus(&f.mul(&zm));
    let nf = normal_form(&comm, bc, Strategy::Leftmost);
    nf.e_factors()
        .into_iter()
        .map(|((fw, k, l), x)| (block_label(&fw, &k, &l), x))
        .collect()
}

fn block_label(fw: &[u8], k: &Weight, l: &Weight) -> String {
    let mut s: String = fw.iter().map(|i| format!("F{i}")).collect();
    if !k.is_zero() {
        s.push_str(&format!("K{k}"));
    }
    if !l.is_zero() {
        s.push_str(&format!("L{l}"));
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}
