//! Run configuration: a flat text file of typed `key: type = value` lines.
//!
//! ```text
//! # comments and blank lines are ignored
//! tau: int = 2
//! n: int = 2
//! mode: str = solved-symbolic
//! method: str = random
//! seeds: ints = 1, 2, 3
//! assign.p_1_2: int = 2
//! ```
//!
//! Types are `int`, `ints`, `str`, `bool` and `path`. `assign.<var>` sets a
//! free bicharacter parameter to a power of q and selects explicit mode.

use std::collections::BTreeMap;
use std::path::PathBuf;

use thiserror::Error;
use zcentral::lattice::{BicharMode, Bicharacter, Lattice};
use zcentral::membership::{Method, EXACT_WORD_LIMIT};
use zcentral::scalars::Var;
use zcentral::Case;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("unknown key {0:?}")]
    UnknownKey(String),
    #[error("key {key:?} has type {got}, expected {want}")]
    Type {
        key: String,
        got: &'static str,
        want: &'static str,
    },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Case(#[from] zcentral::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Int(i64),
    Ints(Vec<i64>),
    Str(String),
    Bool(bool),
    Path(PathBuf),
}

impl Value {
    fn type_name(&self) -> &'static str {
        match self {
            Value::Int(_) => "int",
            Value::Ints(_) => "ints",
            Value::Str(_) => "str",
            Value::Bool(_) => "bool",
            Value::Path(_) => "path",
        }
    }

    fn parse(ty: &str, raw: &str) -> Result<Self, String> {
        let int = |s: &str| s.trim().parse::<i64>().map_err(|e| format!("{s:?}: {e}"));
        match ty {
            "int" => int(raw).map(Value::Int),
            "ints" => raw
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(int)
                .collect::<Result<_, _>>()
                .map(Value::Ints),
            "str" => Ok(Value::Str(raw.to_string())),
            "bool" => match raw {
                "true" => Ok(Value::Bool(true)),
                "false" => Ok(Value::Bool(false)),
                _ => Err(format!("{raw:?} is not a bool")),
            },
            "path" => Ok(Value::Path(PathBuf::from(raw))),
            _ => Err(format!("unknown type {ty:?}")),
        }
    }
}

/// Parse the text into an ordered key-value map.
pub fn parse(text: &str) -> Result<BTreeMap<String, Value>, ConfigError> {
    let mut out = BTreeMap::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| ConfigError::Syntax { line: k + 1, msg };
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| err("expected `key: type = value`".into()))?;
        let (ty, raw) = rest
            .split_once('=')
            .ok_or_else(|| err("expected `= value`".into()))?;
        let key = key.trim().to_string();
        let value = Value::parse(ty.trim(), raw.trim()).map_err(err)?;
        if out.insert(key.clone(), value).is_some() {
            return Err(err(format!("duplicate key {key:?}")));
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodKind {
    Exact,
    Random,
}

/// Everything a subcommand needs.
#[derive(Clone, Debug, PartialEq)]
pub struct CaseConfig {
    pub tau: u8,
    pub n: usize,
    pub mode: BicharMode,
    pub assign: BTreeMap<Var, i64>,
    pub method: MethodKind,
    pub seeds: Vec<u64>,
    pub trials: usize,
    /// Height bound for `dims` and `radical`; defaults depend on the command.
    pub height: Option<i64>,
    pub exact_word_limit: usize,
    /// Embed membership certificates in `verify-z` reports.
    pub certificates: bool,
    pub output: Option<PathBuf>,
}

impl Default for CaseConfig {
    fn default() -> Self {
        CaseConfig {
            tau: 1,
            n: 2,
            mode: BicharMode::Hat,
            assign: BTreeMap::new(),
            method: MethodKind::Exact,
            seeds: vec![1],
            trials: 5,
            height: None,
            exact_word_limit: EXACT_WORD_LIMIT,
            certificates: true,
            output: None,
        }
    }
}

fn type_error(key: &str, v: &Value, want: &'static str) -> ConfigError {
    ConfigError::Type {
        key: key.to_string(),
        got: v.type_name(),
        want,
    }
}

fn as_int(key: &str, v: &Value) -> Result<i64, ConfigError> {
    match v {
        Value::Int(x) => Ok(*x),
        _ => Err(type_error(key, v, "int")),
    }
}

fn as_str<'a>(key: &str, v: &'a Value) -> Result<&'a str, ConfigError> {
    match v {
        Value::Str(s) => Ok(s),
        _ => Err(type_error(key, v, "str")),
    }
}

fn nonneg(key: &str, x: i64) -> Result<u64, ConfigError> {
    u64::try_from(x).map_err(|_| ConfigError::Invalid(format!("{key} must be nonnegative")))
}

impl CaseConfig {
    /// Overlay the entries of a parsed file.
    pub fn apply(&mut self, map: &BTreeMap<String, Value>) -> Result<(), ConfigError> {
        for (key, v) in map {
            let k = key.as_str();
            match k {
                "tau" => self.tau = nonneg(k, as_int(k, v)?)? as u8,
                "n" => self.n = nonneg(k, as_int(k, v)?)? as usize,
                "trials" => self.trials = nonneg(k, as_int(k, v)?)? as usize,
                "height" => self.height = Some(as_int(k, v)?),
                "exact_word_limit" => self.exact_word_limit = nonneg(k, as_int(k, v)?)? as usize,
                "seed" => self.seeds = vec![nonneg(k, as_int(k, v)?)?],
                "seeds" => match v {
                    Value::Ints(xs) => {
                        self.seeds = xs.iter().map(|&x| nonneg(k, x)).collect::<Result<_, _>>()?
                    }
                    _ => return Err(type_error(k, v, "ints")),
                },
                "mode" => self.mode = as_str(k, v)?.parse().map_err(ConfigError::Invalid)?,
                "method" => self.method = parse_method(as_str(k, v)?)?,
                "output" => match v {
                    Value::Path(p) => self.output = Some(p.clone()),
                    _ => return Err(type_error(k, v, "path")),
                },
                _ if k.starts_with("assign.") => {
                    let var: Var = k["assign.".len()..].parse().map_err(ConfigError::Invalid)?;
                    self.assign.insert(var, as_int(k, v)?);
                }
                "certificates" => match v {
                    Value::Bool(b) => self.certificates = *b,
                    _ => return Err(type_error(k, v, "bool")),
                },
                _ => return Err(ConfigError::UnknownKey(key.clone())),
            }
        }
        if !self.assign.is_empty() {
            self.mode = BicharMode::Explicit;
        }
        Ok(())
    }

    pub fn case(&self) -> Result<Case, ConfigError> {
        Ok(Case::new(self.tau, self.n)?)
    }

    /// The bicharacter; explicit assignments specialize the solved one and
    /// must satisfy the defining constraints.
    pub fn bichar(&self) -> Result<Bicharacter, ConfigError> {
        let lat = Lattice::new(self.case()?);
        if self.mode != BicharMode::Explicit {
            return Ok(Bicharacter::new(&lat, self.mode));
        }
        let known = Bicharacter::solve_ass(&lat).parameters();
        if let Some(v) = self.assign.keys().find(|v| !known.contains(v)) {
            return Err(ConfigError::Invalid(format!(
                "{v} is not a free parameter of this case"
            )));
        }
        let bc = Bicharacter::solve_ass(&lat).specialize(&self.assign);
        let bad = bc.constraint_violations(&lat);
        if !bad.is_empty() {
            return Err(ConfigError::Invalid(format!(
                "assignments violate the bicharacter constraints: {}",
                bad.join("; ")
            )));
        }
        Ok(bc)
    }

    pub fn membership_method(&self) -> Method {
        match self.method {
            MethodKind::Exact => Method::Exact,
            MethodKind::Random => Method::Random {
                seed: self.seeds[0],
                trials: self.trials,
            },
        }
    }

    /// The seed recorded in reports: only random runs depend on it.
    pub fn report_seed(&self) -> Option<u64> {
        (self.method == MethodKind::Random).then(|| self.seeds[0])
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        self.case()?;
        if self.seeds.is_empty() {
            return Err(ConfigError::Invalid("at least one seed is needed".into()));
        }
        if self.method == MethodKind::Random && self.trials == 0 {
            return Err(ConfigError::Invalid("trials must be positive".into()));
        }
        if self.mode == BicharMode::Explicit {
            self.bichar()?;
        }
        Ok(())
    }
}

pub fn parse_method(s: &str) -> Result<MethodKind, ConfigError> {
    match s {
        "exact" => Ok(MethodKind::Exact),
        "random" => Ok(MethodKind::Random),
        _ => Err(ConfigError::Invalid(format!("unknown method {s:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn typed_lines_parse() {
        let m = parse("tau: int = 4\n# note\nseeds: ints = 1, 2,3\nmode: str = hat # inline\n")
            .unwrap();
        assert_eq!(m["tau"], Value::Int(4));
        assert_eq!(m["seeds"], Value::Ints(vec![1, 2, 3]));
        assert_eq!(m["mode"], Value::Str("hat".into()));
    }

    #[test]
    fn wrong_type_is_rejected() {
        let m = parse("tau: str = 4").unwrap();
        let err = CaseConfig::default().apply(&m).unwrap_err();
        assert!(matches!(err, ConfigError::Type { .. }));
    }

    #[test]
    fn missing_type_is_a_syntax_error() {
        assert!(matches!(
            parse("tau = 4"),
            Err(ConfigError::Syntax { line: 1, .. })
        ));
    }

    #[test]
    fn unknown_keys_and_duplicates_are_rejected() {
        let m = parse("colour: str = red").unwrap();
        assert!(matches!(
            CaseConfig::default().apply(&m),
            Err(ConfigError::UnknownKey(_))
        ));
        assert!(parse("n: int = 2\nn: int = 3").is_err());
    }

    #[test]
    fn rank_constraint_is_enforced() {
        let m = parse("tau: int = 2\nn: int = 1").unwrap();
        let mut c = CaseConfig::default();
        c.apply(&m).unwrap();
        assert!(c.validate().is_err());
    }

    #[test]
    fn assignments_select_explicit_mode() {
        let m = parse("tau: int = 1\nn: int = 2\nassign.p_1_2: int = 2").unwrap();
        let mut c = CaseConfig::default();
        c.apply(&m).unwrap();
        assert_eq!(c.mode, BicharMode::Explicit);
        let bc = c.bichar().unwrap();
        assert!(!bc.parameters().contains(&Var::P(1, 2)));
        let m = parse("assign.p_0_1: int = 2").unwrap();
        let mut c = CaseConfig::default();
        c.apply(&m).unwrap();
        assert!(c.bichar().is_err());
    }
}
