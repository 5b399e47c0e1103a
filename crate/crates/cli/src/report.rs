use std::collections::BTreeMap;
use std::fmt;

use homlie::homlie::HomLieError;
use homlie::ideal::IdealError;
use homlie::poly::{GroebnerError, PolyError};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Success,
    Counterexample,
    BudgetExhausted,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Success => 0,
            Outcome::Counterexample => 1,
            Outcome::BudgetExhausted => 3,
        }
    }
}

/// The machine-readable result of one run. Maps are ordered, so the
/// serialised form is stable.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub subcommand: String,
    pub inputs: BTreeMap<String, String>,
    pub outcome: Outcome,
    pub payload: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

/// A report plus its human-readable rendering.
pub struct Run {
    pub report: RunReport,
    pub text: Vec<String>,
}

impl Run {
    pub fn new(
        subcommand: &str,
        inputs: BTreeMap<String, String>,
        outcome: Outcome,
        payload: Value,
    ) -> Run {
        Run {
            report: RunReport {
                subcommand: subcommand.to_string(),
                inputs,
                outcome,
                payload,
                timing_ms: None,
            },
            text: Vec::new(),
        }
    }

    pub fn line(&mut self, s: impl Into<String>) -> &mut Self {
        self.text.push(s.into());
        self
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Bad flags, unreadable or malformed input, refused preconditions.
    Input(String),
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "error: {m}"),
            CliError::Budget(m) => write!(f, "budget exhausted: {m}"),
        }
    }
}

pub fn input(msg: impl fmt::Display) -> CliError {
    CliError::Input(msg.to_string())
}

impl From<GroebnerError> for CliError {
    fn from(e: GroebnerError) -> Self {
        match e {
            GroebnerError::BudgetExhausted { .. } => CliError::Budget(e.to_string()),
            GroebnerError::Poly(p) => p.into(),
        }
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        input(e)
    }
}

impl From<IdealError> for CliError {
    fn from(e: IdealError) -> Self {
        match e {
            IdealError::Groebner(g) => g.into(),
            other => input(other),
        }
    }
}

impl From<HomLieError> for CliError {
    fn from(e: HomLieError) -> Self {
        match e {
            HomLieError::Groebner(g) => g.into(),
            HomLieError::Ideal(i) => i.into(),
            other => input(other),
        }
    }
}
