//! Parameter sweeps of the second-law quantities, written as CSV.

use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::scheme::DEFAULT_MAX_MOMENT;
use crate::thermo::{self, SecondLawReport, WorkReport};

use super::resolve::{resolve, InstrumentSource};
use super::run::with_jobs;
use super::{Scenario, ScenarioError};

/// A scenario template evaluated at every point of an axis. The template's
/// `checks` are ignored; every point reports the work and second-law
/// quantities for each state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sweep {
    #[serde(default = "super::schema_version")]
    pub schema_version: u32,
    pub template: Scenario,
    pub axis: Axis,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Axis {
    Beta { values: Vec<f64> },
    /// Scenario seeds `from..=to`; empty when `to < from`.
    Seed { from: u64, to: u64 },
}

impl Axis {
    fn name(&self) -> &'static str {
        match self {
            Axis::Beta { .. } => "beta",
            Axis::Seed { .. } => "seed",
        }
    }

    fn points(&self, template: &Scenario) -> Vec<(String, Scenario)> {
        match self {
            Axis::Beta { values } => values
                .iter()
                .map(|&b| (format!("{b:?}"), Scenario { beta: b, ..template.clone() }))
                .collect(),
            Axis::Seed { from, to } => (*from..=*to)
                .map(|s| (s.to_string(), Scenario { seed: s, ..template.clone() }))
                .collect(),
        }
    }
}

pub const SWEEP_COLUMNS: [&str; 15] = [
    "axis",
    "value",
    "state",
    "beta",
    "extractable_work",
    "average_extractable_work",
    "outcome_divergence",
    "heat",
    "groenewold_gain",
    "prop1_slack",
    "eq5_identity_defect",
    "eq5_bound_slack",
    "heat_bound_slack",
    "second_law_verdict",
    "free_scheme_verdict",
];

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub axis: &'static str,
    pub value: String,
    pub state: String,
    pub work: WorkReport,
    pub law: SecondLawReport,
    /// `None` when the template has an explicit instrument rather than a
    /// scheme.
    pub free_scheme: Option<bool>,
}

impl SweepRow {
    fn record(&self) -> Vec<String> {
        let w = &self.work;
        let l = &self.law;
        let mut out = vec![self.axis.to_string(), self.value.clone(), self.state.clone()];
        out.extend(
            [
                w.beta,
                w.extractable_work,
                w.average_extractable_work,
                w.outcome_divergence,
                w.heat,
                w.groenewold_gain,
                l.prop1_slack,
                l.eq5_identity_defect,
                l.eq5_bound_slack,
                l.heat_bound_slack,
            ]
            .iter()
            .map(|v| format!("{v:?}")),
        );
        out.push(l.verdict.to_string());
        out.push(self.free_scheme.map_or_else(String::new, |b| b.to_string()));
        out
    }
}

fn point_rows(axis: &'static str, value: String, s: &Scenario) -> Result<Vec<SweepRow>, ScenarioError> {
    let r = resolve(s)?;
    let tol = r.theorem_tol;
    let wrap = || ScenarioError::object(format!("sweep point {axis} = {value}"));
    let (ins, source) = r
        .instrument
        .as_ref()
        .ok_or_else(|| ScenarioError::Invalid("sweep template needs a scheme or an instrument".into()))?;
    if r.states.is_empty() {
        return Err(ScenarioError::Invalid("sweep template needs at least one state".into()));
    }
    let free = match (source, &r.scheme) {
        (InstrumentSource::Scheme, Some(scheme)) => Some(scheme.validate(tol, DEFAULT_MAX_MOMENT).map_err(wrap())?),
        _ => None,
    };
    let mut rows = Vec::with_capacity(r.states.len());
    for (name, rho) in &r.states {
        let (law, work) = match (&free, &r.scheme) {
            (Some(_), Some(scheme)) => thermo::second_law_report_for(scheme, ins, rho, tol),
            _ => thermo::diagnostic_report(ins, rho, &r.system_hamiltonian, r.beta, tol),
        }
        .map_err(wrap())?;
        rows.push(SweepRow {
            axis,
            value: value.clone(),
            state: name.clone(),
            work,
            law,
            free_scheme: free.as_ref().map(|f| f.verdict),
        });
    }
    Ok(rows)
}

/// Evaluates every axis point, in parallel across points, and returns the
/// rows in axis order, then state order.
pub fn run_sweep(sweep: &Sweep, jobs: Option<usize>) -> Result<Vec<SweepRow>, ScenarioError> {
    let axis = sweep.axis.name();
    let points = sweep.axis.points(&sweep.template);
    let nested = with_jobs(jobs, || {
        points
            .into_par_iter()
            .map(|(value, s)| point_rows(axis, value, &s))
            .collect::<Result<Vec<_>, _>>()
    })??;
    Ok(nested.into_iter().flatten().collect())
}

/// Writes the header row and one row per [`SweepRow`].
pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SWEEP_COLUMNS)?;
    for row in rows {
        w.write_record(row.record())?;
    }
    w.flush()?;
    Ok(())
}
