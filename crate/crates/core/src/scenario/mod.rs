//! JSON scenario files and their execution.
//!
//! A scenario names a system Hamiltonian, an inverse temperature, and some
//! combination of a measurement scheme, an explicit instrument, an
//! observable and input states, followed by the checks to run on them.
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "system_hamiltonian": [0.0, 1.0],
//!   "probe_hamiltonian": [0.0, 1.0],
//!   "beta": 1.0,
//!   "scheme": { "type": "random_block", "mixture_size": 3 },
//!   "states": [{ "type": "random", "count": 200 }, { "type": "ground" }],
//!   "checks": ["free_scheme", "second_law", "covariant", "gibbs_preserving"],
//!   "seed": 7
//! }
//! ```
//!
//! Matrices are row-major nested arrays of real numbers or `[re, im]` pairs;
//! a flat list of reals is a diagonal matrix. Randomness is derived from
//! `seed` per object, so a scenario always resolves to the same objects.

mod resolve;
mod run;
mod sweep;

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::json::MatrixSpec;

pub use resolve::{resolve, InstrumentSource, Resolved};
pub use run::{run_scenario, CheckResult, CheckStatus, RunOptions, RunReport, Summary};
pub use sweep::{run_sweep, write_csv, Axis, Sweep, SweepRow, SWEEP_COLUMNS};

pub const SCHEMA_VERSION: u32 = 1;

/// Default tolerance for theorem checks.
pub const THEOREM_TOL: f64 = 1e-8;

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{origin}:{line}:{column}: {message}")]
    Parse {
        origin: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid scenario: {0}")]
    Invalid(String),
    #[error("{context}: {source}")]
    Object {
        context: String,
        #[source]
        source: crate::Error,
    },
}

impl ScenarioError {
    pub(crate) fn object(context: impl Into<String>) -> impl FnOnce(crate::Error) -> ScenarioError {
        let context = context.into();
        move |source| ScenarioError::Object { context, source }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    #[serde(default = "schema_version")]
    pub schema_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub system_hamiltonian: MatrixSpec,
    /// Defaults to the system Hamiltonian for schemes that need a probe.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub probe_hamiltonian: Option<MatrixSpec>,
    pub beta: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scheme: Option<SchemeSpec>,
    /// Explicit instrument; takes precedence over the scheme's induced one
    /// for instrument checks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instrument: Option<InstrumentSpec>,
    /// Observable for observable checks; defaults to the instrument's
    /// induced observable.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub observable: Option<ObservableSpec>,
    #[serde(default)]
    pub states: Vec<StateSpec>,
    pub checks: Vec<CheckName>,
    #[serde(default)]
    pub tolerances: Tolerances,
    #[serde(default)]
    pub seed: u64,
}

fn schema_version() -> u32 {
    SCHEMA_VERSION
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tolerances {
    #[serde(default = "theorem_tol")]
    pub theorem: f64,
    #[serde(default = "validation_tol")]
    pub validation: f64,
}

fn theorem_tol() -> f64 {
    THEOREM_TOL
}

fn validation_tol() -> f64 {
    crate::objects::VALIDATION_TOL
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            theorem: THEOREM_TOL,
            validation: crate::objects::VALIDATION_TOL,
        }
    }
}

fn one() -> usize {
    1
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SchemeSpec {
    /// Swap interaction between equal-dimensional system and probe.
    Swap {
        #[serde(default)]
        pointer: ObservableSpec,
    },
    /// Random mixture of energy-conserving block unitaries.
    RandomBlock {
        #[serde(default)]
        pointer: ObservableSpec,
        #[serde(default = "one")]
        mixture_size: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seed: Option<u64>,
    },
    /// Explicit Kraus operators on system ⊗ probe.
    Kraus {
        kraus: Vec<MatrixSpec>,
        #[serde(default)]
        pointer: ObservableSpec,
    },
    /// The thermalising swap scheme for an observable of the system; the
    /// probe copies the system.
    Trivial { observable: ObservableSpec },
}

/// Observables are resolved against a Hamiltonian from context: the probe's
/// for pointers, the system's otherwise.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ObservableSpec {
    Explicit {
        outcomes: Vec<String>,
        effects: Vec<MatrixSpec>,
    },
    /// Spectral measure of the context Hamiltonian.
    #[default]
    Spectral,
    Computational,
    Trivial { outcomes: usize },
    /// Random POVM with effects diagonal in the computational basis.
    Diagonal {
        outcomes: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seed: Option<u64>,
    },
    /// Random POVM commuting with the context Hamiltonian.
    Commuting {
        outcomes: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seed: Option<u64>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum InstrumentSpec {
    Luders { observable: ObservableSpec },
    Kraus {
        outcomes: Vec<String>,
        kraus_sets: Vec<Vec<MatrixSpec>>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum StateSpec {
    Explicit { name: String, matrix: MatrixSpec },
    /// `count` states, Hilbert–Schmidt mixed or Haar pure.
    Random {
        count: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seed: Option<u64>,
        #[serde(default)]
        pure: bool,
    },
    /// Normalized projector onto the lowest energy level.
    Ground,
    Gibbs,
    MaximallyMixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckName {
    FreeScheme,
    SecondLaw,
    #[serde(alias = "covariance")]
    Covariant,
    GibbsPreserving,
    Nuclear,
    Prop2,
    QuasiComplete,
    ThermalObservable,
    JointObservable,
    PostProcessing,
    Refine,
    Moments,
    SkewChain,
    HeatDuality,
}

impl CheckName {
    pub const ALL: [CheckName; 14] = [
        CheckName::FreeScheme,
        CheckName::SecondLaw,
        CheckName::Covariant,
        CheckName::GibbsPreserving,
        CheckName::Nuclear,
        CheckName::Prop2,
        CheckName::QuasiComplete,
        CheckName::ThermalObservable,
        CheckName::JointObservable,
        CheckName::PostProcessing,
        CheckName::Refine,
        CheckName::Moments,
        CheckName::SkewChain,
        CheckName::HeatDuality,
    ];
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str, origin: &str) -> Result<T, ScenarioError> {
    serde_json::from_str(text).map_err(|e| {
        let full = e.to_string();
        let suffix = format!(" at line {} column {}", e.line(), e.column());
        ScenarioError::Parse {
            origin: origin.to_string(),
            line: e.line(),
            column: e.column(),
            message: full.strip_suffix(&suffix).unwrap_or(&full).to_string(),
        }
    })
}

fn read(path: &Path) -> Result<String, ScenarioError> {
    std::fs::read_to_string(path).map_err(|source| ScenarioError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn check_version(version: u32) -> Result<(), ScenarioError> {
    if version != SCHEMA_VERSION {
        return Err(ScenarioError::Invalid(format!(
            "unsupported schema_version {version}, expected {SCHEMA_VERSION}"
        )));
    }
    Ok(())
}

impl Scenario {
    pub fn from_json(text: &str, origin: &str) -> Result<Self, ScenarioError> {
        let s: Scenario = parse_json(text, origin)?;
        check_version(s.schema_version)?;
        Ok(s)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, ScenarioError> {
        let path = path.as_ref();
        Self::from_json(&read(path)?, &path.display().to_string())
    }
}

impl Sweep {
    pub fn from_json(text: &str, origin: &str) -> Result<Self, ScenarioError> {
        let s: Sweep = parse_json(text, origin)?;
        check_version(s.schema_version)?;
        check_version(s.template.schema_version)?;
        Ok(s)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, ScenarioError> {
        let path = path.as_ref();
        Self::from_json(&read(path)?, &path.display().to_string())
    }
}
