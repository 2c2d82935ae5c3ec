//! Degree-truncated membership in the Serre relator ideal, with certificates,
//! quotient dimensions and PBW counts.

mod pbw;
mod quotient;
mod sample;

use serde::{Serialize, Serializer};

pub use pbw::pbw_dim;
pub use quotient::{FieldRelator, Quotient, Sandwich};
pub use sample::{RandomPoint, SAMPLE_BOUND};

use crate::lattice::Weight;
use crate::quantalg::{words_of_degree, FreeElement, Relator, Word};
use crate::scalars::{Fp, LaurentPoly, RatFunc, Var};

/// Default size limit (in words) of the target component for exact runs.
pub const EXACT_WORD_LIMIT: usize = 50_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "method")]
pub enum Method {
    Exact,
    Random { seed: u64, trials: usize },
}

fn as_string<S: Serializer, T: std::fmt::Display>(x: &T, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// One term c · left · r · right of a certificate.
#[derive(Clone, Debug, Serialize)]
pub struct CertEntry {
    pub left: Vec<u8>,
    pub relator: usize,
    pub relator_name: String,
    pub right: Vec<u8>,
    #[serde(serialize_with = "as_string")]
    pub coeff: RatFunc,
}

/// X = Σ c · left · r · right, checked by re-expansion before it is returned.
#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub degree: Weight,
    pub entries: Vec<CertEntry>,
}

impl Certificate {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Exact membership over the rational function field in the coefficient
/// variables.
pub struct ExactEngine {
    quotient: Quotient<RatFunc>,
}

impl ExactEngine {
    pub fn new(relators: &[Relator], rank: usize) -> Self {
        let rels = relators
            .iter()
            .map(|r| {
                FieldRelator::new(
                    r.name(),
                    r.degree.clone(),
                    r.element.map_coeffs(|c| RatFunc::from_poly(c.clone())),
                )
            })
            .collect();
        ExactEngine {
            quotient: Quotient::new(rank, rels, true),
        }
    }

    pub fn quotient(&mut self) -> &mut Quotient<RatFunc> {
        &mut self.quotient
    }

    pub fn dim(&mut self, lam: &Weight) -> usize {
        self.quotient.dim(lam)
    }

    pub fn contains(&mut self, x: &FreeElement) -> bool {
        self.quotient.contains(&lift(x))
    }

    /// A re-expanding certificate, or `None` if X is not in the ideal.
    pub fn certify(&mut self, x: &FreeElement) -> Option<Certificate> {
        let target = lift(x);
        let parts = self.quotient.decompose(&target)?;
        let check = self.quotient.expand(&parts);
        assert!(
            check == target,
            "certificate does not re-expand to its target"
        );
        let degree = x
            .degree(self.quotient.rank())
            .unwrap_or_else(|| Weight::zero(self.quotient.rank()));
        let entries = parts
            .into_iter()
            .map(|p| CertEntry {
                left: p.left.to_vec(),
                relator_name: self.quotient.relators()[p.relator].name.clone(),
                relator: p.relator,
                right: p.right.to_vec(),
                coeff: p.coeff,
            })
            .collect();
        Some(Certificate { degree, entries })
    }

    /// Re-expand a certificate and compare with X.
    pub fn verify(&self, x: &FreeElement, cert: &Certificate) -> bool {
        let parts: Vec<Sandwich<RatFunc>> = cert
            .entries
            .iter()
            .map(|e| Sandwich {
                left: Word::from_slice(&e.left),
                relator: e.relator,
                right: Word::from_slice(&e.right),
                coeff: e.coeff.clone(),
            })
            .collect();
        self.quotient.expand(&parts) == lift(x)
    }
}

fn lift(x: &FreeElement) -> FreeElement<RatFunc> {
    x.map_coeffs(|c| RatFunc::from_poly(c.clone()))
}

/// Outcome of one random evaluation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TrialOutcome {
    Zero,
    Nonzero,
    /// The point is not in the domain of some coefficient.
    Indeterminate,
}

#[derive(Clone, Debug, Serialize)]
pub struct TrialLog {
    pub point: RandomPoint,
    pub outcome: TrialOutcome,
}

/// Membership tested at random specializations of the coefficient variables,
/// computed in F_p with p = 2⁶¹ − 1.
#[derive(Clone, Debug, Serialize)]
pub struct RandomVerdict {
    pub trials: Vec<TrialLog>,
    /// Heuristic Schwartz–Zippel bound on a false positive over all trials.
    pub failure_bound: f64,
}

impl RandomVerdict {
    pub fn all_zero(&self) -> bool {
        self.trials.iter().all(|t| t.outcome == TrialOutcome::Zero)
    }
}

pub struct RandomEngine {
    points: Vec<RandomPoint>,
    quotients: Vec<Option<Quotient<Fp>>>,
    degree_spread: i64,
}

fn degree_spread(p: &LaurentPoly) -> i64 {
    let degs: Vec<i64> = p.terms().map(|(m, _)| m.degree()).collect();
    match (degs.iter().min(), degs.iter().max()) {
        (Some(lo), Some(hi)) => (hi - lo).max(lo.abs()).max(hi.abs()),
        _ => 0,
    }
}

impl RandomEngine {
    pub fn new(relators: &[Relator], rank: usize, vars: &[Var], seed: u64, trials: usize) -> Self {
        let points = RandomPoint::draw_many(vars, seed, trials);
        let mut spread = 0;
        for r in relators {
            for (_, c) in r.element.terms() {
                spread = spread.max(degree_spread(c));
            }
        }
        let quotients = points
            .iter()
            .map(|pt| {
                let rels: Option<Vec<FieldRelator<Fp>>> = relators
                    .iter()
                    .map(|r| {
                        let e = r.element.try_map_coeffs(|c| pt.eval(c))?;
                        Some(FieldRelator::new(r.name(), r.degree.clone(), e))
                    })
                    .collect();
                rels.map(|rels| Quotient::new(rank, rels, false))
            })
            .collect();
        RandomEngine {
            points,
            quotients,
            degree_spread: spread,
        }
    }

    pub fn points(&self) -> &[RandomPoint] {
        &self.points
    }

    pub fn quotients(&mut self) -> impl Iterator<Item = &mut Quotient<Fp>> {
        self.quotients.iter_mut().flatten()
    }

    pub fn test(&mut self, x: &FreeElement) -> RandomVerdict {
        let mut trials = Vec::new();
        let mut spread = self.degree_spread;
        for (_, c) in x.terms() {
            spread = spread.max(degree_spread(c));
        }
        let mut worst = 0usize;
        for (pt, q) in self.points.iter().zip(self.quotients.iter_mut()) {
            let outcome = match (q, x.try_map_coeffs(|c| pt.eval(c))) {
                (Some(q), Some(y)) => {
                    if let Some(d) = y.degree(q.rank()) {
                        worst = worst.max(q.dim(&d));
                    }
                    if q.contains(&y) {
                        TrialOutcome::Zero
                    } else {
                        TrialOutcome::Nonzero
                    }
                }
                _ => TrialOutcome::Indeterminate,
            };
            trials.push(TrialLog {
                point: pt.clone(),
                outcome,
            });
        }
        // a false zero needs the point to be a root of a polynomial whose
        // degree is at most (dimension + 1) · (coefficient degree spread)
        let deg = ((worst + 1) as f64) * (spread.max(1) as f64) * 2.0;
        let per_trial = (deg / SAMPLE_BOUND as f64).min(1.0);
        let failure_bound = per_trial.powi(trials.len() as i32);
        RandomVerdict {
            trials,
            failure_bound,
        }
    }
}

/// Membership verdict for a single element.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum Verdict {
    Member { certificate: Certificate },
    NotMember,
    Random(RandomVerdict),
}

/// One-shot membership test. For repeated queries build an engine.
pub fn member(x: &FreeElement, relators: &[Relator], rank: usize, method: Method) -> Verdict {
    match method {
        Method::Exact => match ExactEngine::new(relators, rank).certify(x) {
            Some(certificate) => Verdict::Member { certificate },
            None => Verdict::NotMember,
        },
        Method::Random { seed, trials } => {
            let mut vars: Vec<Var> = relators
                .iter()
                .flat_map(|r| {
                    r.element
                        .terms()
                        .flat_map(|(_, c)| c.vars())
                        .collect::<Vec<_>>()
                })
                .chain(x.terms().flat_map(|(_, c)| c.vars()))
                .collect();
            vars.sort();
            vars.dedup();
            Verdict::Random(RandomEngine::new(relators, rank, &vars, seed, trials).test(x))
        }
    }
}

/// All sandwiches u·r·v of total degree λ, as a spanning list of the ideal's
/// λ-component.
pub fn ideal_component(relators: &[Relator], lam: &Weight) -> Vec<FreeElement> {
    let mut out = Vec::new();
    for r in relators {
        let rest = lam - &r.degree;
        if !rest.is_nonneg() {
            continue;
        }
        for left_deg in rest.lower_set() {
            let right_deg = &rest - &left_deg;
            for u in words_of_degree(&left_deg) {
                for v in words_of_degree(&right_deg) {
                    let uw = FreeElement::word(u.clone(), LaurentPoly::int(1));
                    let vw = FreeElement::word(v, LaurentPoly::int(1));
                    out.push(uw.mul(&r.element).mul(&vw));
                }
            }
        }
    }
    out
}

/// dim of the free component minus the rank of the ideal component.
pub fn quotient_dim(relators: &[Relator], rank: usize, lam: &Weight) -> usize {
    ExactEngine::new(relators, rank).dim(lam)
}
