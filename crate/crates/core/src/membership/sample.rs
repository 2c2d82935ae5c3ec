use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::scalars::{Fp, GaussRational, LaurentPoly, Var};

/// Bound on numerators and denominators of sampled values.
pub const SAMPLE_BOUND: i64 = 1_000_000;

/// A rational evaluation point for the coefficient variables.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RandomPoint {
    pub values: BTreeMap<String, (i64, i64)>,
    #[serde(skip)]
    images: BTreeMap<Var, Fp>,
}

impl RandomPoint {
    /// Nonzero values num/den with |num|, den ≤ 10⁶.
    pub fn draw(vars: &[Var], rng: &mut ChaCha8Rng) -> Self {
        let mut values = BTreeMap::new();
        let mut images = BTreeMap::new();
        for &v in vars {
            let (num, den, img) = loop {
                let mut num = rng.gen_range(1..=SAMPLE_BOUND);
                if rng.gen_bool(0.5) {
                    num = -num;
                }
                let den = rng.gen_range(1..=SAMPLE_BOUND);
                // a value that is 0 or a small root of unity would not be generic
                if num.abs() == den {
                    continue;
                }
                if let Some(img) = Fp::from_frac(num as i128, den as i128) {
                    break (num, den, img);
                }
            };
            values.insert(v.to_string(), (num, den));
            images.insert(v, img);
        }
        RandomPoint { values, images }
    }

    /// Seeded sequence of distinct points.
    pub fn draw_many(vars: &[Var], seed: u64, trials: usize) -> Vec<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out: Vec<Self> = Vec::new();
        while out.len() < trials {
            let p = Self::draw(vars, &mut rng);
            if !out.contains(&p) {
                out.push(p);
            }
        }
        out
    }

    /// The image of a Laurent polynomial in F_p; `None` if a variable is
    /// unassigned or a coefficient is not real.
    pub fn eval(&self, p: &LaurentPoly) -> Option<Fp> {
        let missing = p.vars().into_iter().any(|v| !self.images.contains_key(&v));
        if missing {
            return None;
        }
        p.eval_in(&|c: &GaussRational| Fp::from_gauss(c), &|v| self.images[&v])
    }
}
