//! Run configuration: a sectioned `key = value` file, overridden by flags.
//!
//! ```text
//! [setting]
//! name = juhl
//! n = 3
//! delta = 2
//!
//! [weights]
//! lambda = sym
//!
//! [solve]
//! degree_max = 4
//! parity = even
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use thiserror::Error;

use crate::algebra::rational::{parse_rat, rat_to_string};
use crate::algebra::{BigRat, RatFunc, Ring, Vars};
use crate::lie::{builtin_setting, BuiltinSetting, RepWeight};
use crate::solver::{FSetting, Parity, Target, WeightValue};

pub const DEFAULT_JUHL_N: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{field}: {msg}")]
pub struct ConfigError {
    pub field: String,
    pub msg: String,
}

fn err(field: &str, msg: impl Into<String>) -> ConfigError {
    ConfigError {
        field: field.to_string(),
        msg: msg.into(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
    Latex,
}

impl Format {
    pub fn parse(s: &str) -> Option<Format> {
        match s {
            "json" => Some(Format::Json),
            "text" => Some(Format::Text),
            "latex" => Some(Format::Latex),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Text => "text",
            Format::Latex => "latex",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub setting: String,
    /// Rankin–Cohen: the order. Conformal: the dimension.
    pub n: Option<usize>,
    /// Conformal target degree `ν - λ`.
    pub delta: Option<u32>,
    pub weights: BTreeMap<String, WeightValue>,
    /// Explicit target character by subalgebra basis name, as linear forms in
    /// the symbolic weights.
    pub target: BTreeMap<String, String>,
    pub degree_max: Option<u32>,
    pub parity: Parity,
    pub reduce: bool,
    pub samples: usize,
    pub test_degree: u32,
    pub seed: u64,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            setting: String::new(),
            n: None,
            delta: None,
            weights: BTreeMap::new(),
            target: BTreeMap::new(),
            degree_max: None,
            parity: Parity::Any,
            reduce: true,
            samples: 3,
            test_degree: 6,
            seed: 1,
            format: Format::Json,
            out: None,
        }
    }
}

pub fn parse_weight_value(s: &str) -> Option<WeightValue> {
    match s.trim() {
        "sym" => Some(WeightValue::Symbolic),
        t => parse_rat(t).ok().map(WeightValue::Value),
    }
}

fn weight_text(v: &WeightValue) -> String {
    match v {
        WeightValue::Symbolic => "sym".into(),
        WeightValue::Value(r) => rat_to_string(r),
    }
}

fn parse_num<T: std::str::FromStr>(field: &str, v: &str) -> Result<T, ConfigError> {
    v.trim()
        .parse()
        .map_err(|_| err(field, format!("cannot parse {v:?}")))
}

fn parse_bool(field: &str, v: &str) -> Result<bool, ConfigError> {
    match v.trim() {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(err(field, format!("expected true or false, got {v:?}"))),
    }
}

impl RunConfig {
    /// Parses the file format; unknown sections and keys are errors.
    pub fn parse(text: &str) -> Result<RunConfig, ConfigError> {
        let mut cfg = RunConfig::default();
        let mut section = String::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                section = name.trim().to_string();
                if !["setting", "weights", "target", "solve", "verify", "output"]
                    .contains(&section.as_str())
                {
                    return Err(err(
                        &section,
                        format!("unknown section on line {}", lineno + 1),
                    ));
                }
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return Err(err(
                    &section,
                    format!("line {}: expected key = value", lineno + 1),
                ));
            };
            let (k, v) = (k.trim(), v.trim());
            let field = format!("{section}.{k}");
            cfg.set(&section, k, v).map_err(|e| {
                if e.field.is_empty() {
                    err(&field, e.msg)
                } else {
                    e
                }
            })?;
        }
        Ok(cfg)
    }

    fn set(&mut self, section: &str, k: &str, v: &str) -> Result<(), ConfigError> {
        let field = format!("{section}.{k}");
        match (section, k) {
            ("setting", "name") => self.setting = v.to_string(),
            ("setting", "n") => self.n = Some(parse_num(&field, v)?),
            ("setting", "delta") => self.delta = Some(parse_num(&field, v)?),
            ("weights", slot) => {
                let w = parse_weight_value(v)
                    .ok_or_else(|| err(&field, "expected sym or a rational"))?;
                self.weights.insert(slot.to_string(), w);
            }
            ("target", name) => {
                self.target.insert(name.to_string(), v.to_string());
            }
            ("solve", "degree_max") => self.degree_max = Some(parse_num(&field, v)?),
            ("solve", "parity") => {
                self.parity =
                    Parity::parse(v).ok_or_else(|| err(&field, "expected any, even or odd"))?
            }
            ("solve", "reduce") => self.reduce = parse_bool(&field, v)?,
            ("verify", "samples") => self.samples = parse_num(&field, v)?,
            ("verify", "test_degree") => self.test_degree = parse_num(&field, v)?,
            ("verify", "seed") => self.seed = parse_num(&field, v)?,
            ("output", "format") => {
                self.format =
                    Format::parse(v).ok_or_else(|| err(&field, "expected json, text or latex"))?
            }
            ("output", "out") => self.out = Some(PathBuf::from(v)),
            _ => return Err(err(&field, "unknown key")),
        }
        Ok(())
    }

    /// The resolved configuration in file syntax; parses back to `self`.
    pub fn to_text(&self) -> String {
        let mut s = String::from("[setting]\n");
        writeln!(s, "name = {}", self.setting).unwrap();
        if let Some(n) = self.n {
            writeln!(s, "n = {n}").unwrap();
        }
        if let Some(d) = self.delta {
            writeln!(s, "delta = {d}").unwrap();
        }
        if !self.weights.is_empty() {
            s.push_str("\n[weights]\n");
            for (k, v) in &self.weights {
                writeln!(s, "{k} = {}", weight_text(v)).unwrap();
            }
        }
        if !self.target.is_empty() {
            s.push_str("\n[target]\n");
            for (k, v) in &self.target {
                writeln!(s, "{k} = {v}").unwrap();
            }
        }
        s.push_str("\n[solve]\n");
        if let Some(d) = self.degree_max {
            writeln!(s, "degree_max = {d}").unwrap();
        }
        writeln!(s, "parity = {}", self.parity.as_str()).unwrap();
        writeln!(s, "reduce = {}", self.reduce).unwrap();
        s.push_str("\n[verify]\n");
        writeln!(s, "samples = {}", self.samples).unwrap();
        writeln!(s, "test_degree = {}", self.test_degree).unwrap();
        writeln!(s, "seed = {}", self.seed).unwrap();
        s.push_str("\n[output]\n");
        writeln!(s, "format = {}", self.format.as_str()).unwrap();
        if let Some(p) = &self.out {
            writeln!(s, "out = {}", p.display()).unwrap();
        }
        s
    }

    /// The builtin named by the config, with the conformal dimension
    /// defaulting to [`DEFAULT_JUHL_N`].
    pub fn builtin(&self) -> Result<BuiltinSetting, ConfigError> {
        if self.setting.is_empty() {
            return Err(err("setting", "no setting given"));
        }
        let n = match self.setting.as_str() {
            "juhl" => Some(self.n.unwrap_or(DEFAULT_JUHL_N)),
            _ => None,
        };
        builtin_setting(&self.setting, n).map_err(|e| {
            let field = if matches!(e, crate::lie::LieError::UnknownSetting(_)) {
                "setting"
            } else {
                "n"
            };
            err(field, e.to_string())
        })
    }

    /// The requested target degree: the order for Rankin–Cohen, `delta` for
    /// the conformal setting.
    pub fn target_degree(&self) -> Result<Option<u32>, ConfigError> {
        match self.setting.as_str() {
            "rankin_cohen" => {
                if self.delta.is_some() {
                    return Err(err(
                        "delta",
                        "only meaningful for juhl; use n for the Rankin–Cohen order",
                    ));
                }
                self.n
                    .map(|n| u32::try_from(n).map_err(|_| err("n", "too large")))
                    .transpose()
            }
            _ => Ok(self.delta),
        }
    }

    pub fn fsetting(&self) -> Result<FSetting, ConfigError> {
        let b = self.builtin()?;
        let degree = self.target_degree()?;
        let degree_max = match (self.degree_max, degree) {
            (Some(m), _) => m,
            (None, Some(d)) => d,
            (None, None) => {
                return Err(err("degree_max", "required when no target degree is given"))
            }
        };
        let mut s = FSetting::from_builtin(&b, &self.weights, Target::Discover, degree_max)
            .map_err(|e| err("weights", e.to_string()))?;
        s.target = if !self.target.is_empty() {
            if degree.is_some() {
                return Err(err(
                    "target",
                    "give either a target character or a target degree",
                ));
            }
            Target::Weight(self.target_character(&s)?)
        } else {
            degree.map_or(Target::Discover, Target::Degree)
        };
        s.parity = self.parity;
        s.reduce = self.reduce;
        Ok(s)
    }

    fn target_character(&self, s: &FSetting) -> Result<RepWeight, ConfigError> {
        let mut slots = Vec::new();
        for (name, form) in &self.target {
            let field = format!("target.{name}");
            let idx = s
                .lie
                .sub()
                .iter()
                .position(|e| e.name == *name)
                .ok_or_else(|| err(&field, "not a subalgebra basis element"))?;
            slots.push((
                idx,
                parse_linear(form, &s.params).map_err(|m| err(&field, m))?,
            ));
        }
        Ok(RepWeight::character(slots))
    }
}

/// Parses `c0 + c1*p1 + ...` with rational `c_i` and parameter names `p_i`.
pub fn parse_linear(s: &str, params: &Vars) -> Result<RatFunc, String> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err("empty expression".into());
    }
    let mut out = RatFunc::constant(BigRat::from_integer(0.into()));
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let (neg, body) = match rest.as_bytes()[0] {
            b'-' => (true, &rest[1..]),
            b'+' => (false, &rest[1..]),
            _ => (false, rest),
        };
        let end = body[1.min(body.len())..]
            .find(['+', '-'])
            .map_or(body.len(), |i| i + 1);
        let term = &body[..end];
        rest = &body[end..];
        let (coef, name) = match term.split_once('*') {
            Some((c, v)) => (parse_rat(c).map_err(|e| e.to_string())?, Some(v)),
            None if term.starts_with(|c: char| c.is_ascii_alphabetic()) => {
                (BigRat::from_integer(1.into()), Some(term))
            }
            None => (parse_rat(term).map_err(|e| e.to_string())?, None),
        };
        let coef = if neg { -coef } else { coef };
        let value = match name {
            Some(v) => {
                let i = params
                    .iter()
                    .position(|p| p == v)
                    .ok_or_else(|| format!("{v} is not a symbolic weight"))?;
                RatFunc::param(params.clone(), i).mul_ref(&RatFunc::constant(coef))
            }
            None => RatFunc::constant(coef),
        };
        out = out.add_ref(&value);
    }
    Ok(out)
}
