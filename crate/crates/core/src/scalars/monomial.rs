use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// A symbol of the coefficient ring.
///
/// The universe is fixed: `q`, the twist parameters `p_{ij}` (`i < j`), the
/// representation parameters `z_i`, `u_i`, the loop variable `t`, and generic
/// symbols `x_i` used by tests. The derived order is the variable order used
/// by monomial comparison.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    Q,
    P(u8, u8),
    Z(u8),
    U(u8),
    T,
    X(u8),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Q => write!(f, "q"),
            Var::P(i, j) => write!(f, "p_{i}_{j}"),
            Var::Z(i) => write!(f, "z_{i}"),
            Var::U(i) => write!(f, "u_{i}"),
            Var::T => write!(f, "t"),
            Var::X(i) => write!(f, "x_{i}"),
        }
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Var {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.trim().split('_').collect();
        let idx = |k: usize| -> Result<u8, String> {
            parts
                .get(k)
                .and_then(|p| p.parse().ok())
                .ok_or_else(|| format!("bad variable {s:?}"))
        };
        match (parts[0], parts.len()) {
            ("q", 1) => Ok(Var::Q),
            ("t", 1) => Ok(Var::T),
            ("p", 3) => {
                let (i, j) = (idx(1)?, idx(2)?);
                if i >= j {
                    return Err(format!("twist parameter {s:?} needs i < j"));
                }
                Ok(Var::P(i, j))
            }
            ("z", 2) => Ok(Var::Z(idx(1)?)),
            ("u", 2) => Ok(Var::U(idx(1)?)),
            ("x", 2) => Ok(Var::X(idx(1)?)),
            _ => Err(format!("unknown variable {s:?}")),
        }
    }
}

/// A Laurent monomial: sorted `(variable, exponent)` pairs, zero exponents dropped.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[(Var, i32); 4]>);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: i32) -> Self {
        if e == 0 {
            return Self::one();
        }
        let mut s = SmallVec::new();
        s.push((v, e));
        Monomial(s)
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, i32)>) -> Self {
        pairs
            .into_iter()
            .fold(Self::one(), |acc, (v, e)| acc.mul(&Self::var_pow(v, e)))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pairs(&self) -> &[(Var, i32)] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> i32 {
        self.0
            .iter()
            .find(|(w, _)| *w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn has_negative(&self) -> bool {
        self.0.iter().any(|&(_, e)| e < 0)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &o.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn inv(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Self::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    /// Componentwise minimum of exponents (absent variables count as 0).
    pub fn gcd(&self, o: &Monomial) -> Monomial {
        let mut vars: Vec<Var> = self.0.iter().chain(o.0.iter()).map(|p| p.0).collect();
        vars.sort();
        vars.dedup();
        Monomial::from_pairs(
            vars.into_iter()
                .map(|v| (v, self.exponent(v).min(o.exponent(v)))),
        )
    }

    /// Drop the given variable.
    pub fn without(&self, v: Var) -> Monomial {
        Monomial(self.0.iter().copied().filter(|p| p.0 != v).collect())
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.0.iter().map(|p| p.0)
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then the first differing
    /// exponent in variable order decides.
    fn cmp(&self, o: &Self) -> Ordering {
        match self.degree().cmp(&o.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (a, b) = (&self.0, &o.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, e)), None) => return e.cmp(&0),
                (None, Some(&(_, e))) => return 0.cmp(&e),
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(&eb),
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_cancels() {
        let q = Monomial::var(Var::Q);
        assert!(q.mul(&q.inv()).is_one());
    }

    #[test]
    fn graded_lex() {
        let q = Monomial::var(Var::Q);
        let t = Monomial::var(Var::T);
        assert!(q.mul(&q) > q.mul(&t));
        assert!(q > t);
        assert!(Monomial::one() > q.inv());
    }

    #[test]
    fn var_parse() {
        for s in ["q", "t", "p_0_3", "z_2", "u_5", "x_1"] {
            assert_eq!(s.parse::<Var>().unwrap().to_string(), s);
        }
        assert!("p_3_1".parse::<Var>().is_err());
    }
}
