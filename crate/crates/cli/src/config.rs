//! Flat `key = value` run files.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::str::FromStr;

use dunkl_fp::domain::{DunklParams, HalfLineGrid, Superpotential};
use dunkl_fp::numeric::Scheme;
use dunkl_fp::{DerivativeKind, Params, Parity, Potential};

use crate::CliError;

const KEYS: [&str; 16] = [
    "problem", "parity", "kind", "a", "sigma", "mu", "gamma", "lambda", "n", "grid", "xmax", "dt", "steps", "scheme",
    "output", "save_every",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Problem {
    Centrifugal,
    Oscillator,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub problem: Problem,
    pub parity: Parity,
    pub params: Params,
    pub potential: Potential,
    /// Eigenvalue of the Bessel mode (centrifugal runs).
    pub lambda: Option<f64>,
    /// Mode index (oscillator runs).
    pub n: usize,
    pub grid: usize,
    pub xmax: f64,
    pub dt: Option<f64>,
    pub steps: Option<usize>,
    pub scheme: Scheme,
    pub output: Option<PathBuf>,
    pub save_every: usize,
}

fn bad(key: &str, value: &str, why: impl std::fmt::Display) -> CliError {
    CliError::Config(format!("invalid value '{value}' for key '{key}': {why}"))
}

struct Entries(BTreeMap<String, String>);

impl Entries {
    fn parse(text: &str) -> Result<Self, CliError> {
        let mut map = BTreeMap::new();
        for (number, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("line {}: expected 'key = value', got '{line}'", number + 1)))?;
            let (key, value) = (key.trim().to_ascii_lowercase(), value.trim().to_string());
            if !KEYS.contains(&key.as_str()) {
                return Err(CliError::Config(format!("line {}: unknown key '{key}'", number + 1)));
            }
            if map.insert(key.clone(), value).is_some() {
                return Err(CliError::Config(format!("line {}: key '{key}' given twice", number + 1)));
            }
        }
        Ok(Self(map))
    }

    fn raw(&self, key: &str) -> Option<&str> {
        self.0.get(key).map(String::as_str)
    }

    fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>, CliError>
    where
        T::Err: std::fmt::Display,
    {
        self.raw(key).map(|v| v.parse::<T>().map_err(|e| bad(key, v, e))).transpose()
    }

    fn require<T: FromStr>(&self, key: &str) -> Result<T, CliError>
    where
        T::Err: std::fmt::Display,
    {
        self.get(key)?.ok_or_else(|| CliError::Config(format!("missing required key '{key}'")))
    }
}

fn parse_problem(v: &str) -> Result<Problem, CliError> {
    match v.to_ascii_lowercase().as_str() {
        "centrifugal" => Ok(Problem::Centrifugal),
        "oscillator" => Ok(Problem::Oscillator),
        _ => Err(bad("problem", v, "expected centrifugal or oscillator")),
    }
}

pub fn parse_parity(v: &str) -> Result<Parity, CliError> {
    match v.to_ascii_lowercase().as_str() {
        "even" => Ok(Parity::Even),
        "odd" => Ok(Parity::Odd),
        _ => Err(bad("parity", v, "expected even or odd")),
    }
}

fn parse_kind(v: &str) -> Result<DerivativeKind, CliError> {
    match v.to_ascii_lowercase().as_str() {
        "yang" => Ok(DerivativeKind::Yang),
        "dunkl" => Ok(DerivativeKind::Dunkl),
        "ch" | "chung-hassanabadi" => Ok(DerivativeKind::ChungHassanabadi),
        "tp" | "two-parameter" => Ok(DerivativeKind::TwoParameter),
        _ => Err(bad("kind", v, "expected yang, dunkl, ch or tp")),
    }
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let e = Entries::parse(text)?;
        let problem = parse_problem(&e.require::<String>("problem")?)?;
        let parity = parse_parity(&e.require::<String>("parity")?)?;
        let a: f64 = e.require("a")?;
        let mu: f64 = e.require("mu")?;
        let gamma: f64 = e.get("gamma")?.unwrap_or(0.0);
        let kind = match e.raw("kind") {
            Some(v) => parse_kind(v)?,
            None if problem == Problem::Oscillator => DerivativeKind::TwoParameter,
            None => DerivativeKind::ChungHassanabadi,
        };
        let sigma = match kind {
            DerivativeKind::Yang => 0.0,
            DerivativeKind::ChungHassanabadi => e.require("sigma")?,
            _ => e.get("sigma")?.unwrap_or(mu),
        };
        let params = DunklParams::new(kind, sigma, mu, gamma)?;
        let potential = match problem {
            Problem::Centrifugal => Superpotential::centrifugal(a)?,
            Problem::Oscillator => Superpotential::oscillator_centrifugal(a)?,
        };
        if problem == Problem::Oscillator && kind != DerivativeKind::TwoParameter {
            return Err(CliError::Config(format!("oscillator runs need kind = tp, got {kind}")));
        }
        let lambda = match problem {
            Problem::Centrifugal => Some(e.require("lambda")?),
            Problem::Oscillator => e.get("lambda")?,
        };
        let scheme = match e.raw("scheme") {
            Some(v) => v.parse::<Scheme>().map_err(|err| bad("scheme", v, err))?,
            None => Scheme::CrankNicolson,
        };
        let config = Self {
            problem,
            parity,
            params,
            potential,
            lambda,
            n: e.get("n")?.unwrap_or(0),
            grid: e.get("grid")?.unwrap_or(2000),
            xmax: e.get("xmax")?.unwrap_or(12.0),
            dt: e.get("dt")?,
            steps: e.get("steps")?,
            scheme,
            output: e.get::<String>("output")?.map(PathBuf::from),
            save_every: e.get("save_every")?.unwrap_or(1),
        };
        config.validate()?;
        Ok(config)
    }

    fn validate(&self) -> Result<(), CliError> {
        HalfLineGrid::new(self.grid, self.xmax)?;
        if let Some(dt) = self.dt {
            if !(dt > 0.0 && dt.is_finite()) {
                return Err(bad("dt", &dt.to_string(), "must be positive"));
            }
        }
        if self.steps == Some(0) {
            return Err(bad("steps", "0", "must be positive"));
        }
        if self.save_every == 0 {
            return Err(bad("save_every", "0", "must be positive"));
        }
        Ok(())
    }

    pub fn dt(&self) -> Result<f64, CliError> {
        self.dt.ok_or_else(|| CliError::Config("missing required key 'dt'".into()))
    }

    pub fn steps(&self) -> Result<usize, CliError> {
        self.steps.ok_or_else(|| CliError::Config("missing required key 'steps'".into()))
    }

    pub fn grid(&self) -> Result<HalfLineGrid<f64>, CliError> {
        Ok(HalfLineGrid::new(self.grid, self.xmax)?)
    }
}
