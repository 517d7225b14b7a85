//! Check execution and the run report.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::classify::{self, ClassifierVerdict};
use crate::error::Error;
use crate::json::MatrixSpec;
use crate::scheme::{additive_hamiltonian, energy_moment_defect, DEFAULT_MAX_MOMENT};
use crate::thermo::{self, SecondLawReport, WorkReport};

use super::resolve::{resolve, InstrumentSource, Resolved};
use super::{CheckName, Scenario, ScenarioError, SCHEMA_VERSION};

#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    /// Worker threads; `None` lets the pool decide. Never affects results.
    pub jobs: Option<usize>,
    /// Record wall-clock time in the report, which makes it
    /// non-reproducible.
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Passed,
    Failed,
    /// A precondition of the check did not hold, so no verdict was reached.
    Precondition,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: CheckName,
    pub verdict: bool,
    pub status: CheckStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    pub detail: Value,
}

impl CheckResult {
    fn new(check: CheckName, verdict: bool, detail: Value) -> Self {
        CheckResult {
            check,
            verdict,
            status: if verdict { CheckStatus::Passed } else { CheckStatus::Failed },
            message: None,
            detail,
        }
    }

    fn precondition(check: CheckName, err: &Error) -> Self {
        let detail = match err {
            Error::Precondition { check, defect, tol } => json!({ "precondition": check, "defect": defect, "tol": tol }),
            _ => Value::Null,
        };
        CheckResult {
            check,
            verdict: false,
            status: CheckStatus::Precondition,
            message: Some(err.to_string()),
            detail,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<CheckName>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub version: String,
    /// The scenario with defaults filled in.
    pub scenario: Scenario,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl RunReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn classifier(check: CheckName, v: ClassifierVerdict) -> CheckResult {
    CheckResult::new(check, v.verdict, to_value(&v))
}

/// Runs `f` on every state in parallel, keeping the input order.
fn per_state<T, F>(r: &Resolved, f: F) -> Result<Vec<(String, T)>, Error>
where
    T: Send,
    F: Fn(&crate::State) -> Result<T, Error> + Sync,
{
    r.states
        .par_iter()
        .map(|(name, rho)| f(rho).map(|t| (name.clone(), t)))
        .collect()
}

fn min_of(values: impl Iterator<Item = f64>) -> f64 {
    values.fold(f64::INFINITY, f64::min)
}

fn max_of(values: impl Iterator<Item = f64>) -> f64 {
    values.fold(0.0, f64::max)
}

fn second_law(r: &Resolved) -> Result<CheckResult, Error> {
    let tol = r.theorem_tol;
    let (ins, source) = r.instrument.as_ref().expect("resolved");
    let hs = &r.system_hamiltonian;
    let (mode, free, rows): (&str, Option<Value>, Vec<(String, (SecondLawReport, WorkReport))>) =
        match (source, &r.scheme) {
            (InstrumentSource::Scheme, Some(scheme)) => {
                let free = scheme.validate(tol, DEFAULT_MAX_MOMENT)?;
                if !free.verdict {
                    let mut res = CheckResult::precondition(
                        CheckName::SecondLaw,
                        &Error::Precondition {
                            check: "thermodynamically free scheme".into(),
                            defect: free
                                .energy_conservation_defects
                                .iter()
                                .copied()
                                .fold(free.bistochastic_defect.max(free.yanase_defect), f64::max),
                            tol,
                        },
                    );
                    res.detail = json!({ "free_scheme": to_value(&free) });
                    return Ok(res);
                }
                let rows = per_state(r, |rho| thermo::second_law_report_for(scheme, ins, rho, tol))?;
                ("free", Some(to_value(&free)), rows)
            }
            _ => {
                let rows = per_state(r, |rho| thermo::diagnostic_report(ins, rho, hs, r.beta, tol))?;
                ("diagnostic", None, rows)
            }
        };
    let verdict = rows.iter().all(|(_, (law, _))| law.verdict);
    let worst = json!({
        "prop1_slack": min_of(rows.iter().map(|(_, (l, _))| l.prop1_slack)),
        "eq5_identity_defect": max_of(rows.iter().map(|(_, (l, _))| l.eq5_identity_defect)),
        "eq5_bound_slack": min_of(rows.iter().map(|(_, (l, _))| l.eq5_bound_slack)),
        "heat_bound_slack": min_of(rows.iter().map(|(_, (l, _))| l.heat_bound_slack)),
    });
    let states: Vec<Value> = rows
        .iter()
        .map(|(name, (law, work))| json!({ "state": name, "work": to_value(work), "law": to_value(law) }))
        .collect();
    let mut detail = json!({ "mode": mode, "worst": worst, "states": states });
    if let Some(free) = free {
        detail["free_scheme"] = free;
    }
    Ok(CheckResult::new(CheckName::SecondLaw, verdict, detail))
}

fn run_check(check: CheckName, r: &Resolved) -> Result<CheckResult, Error> {
    let tol = r.theorem_tol;
    let hs = &r.system_hamiltonian;
    let ins = r.instrument.as_ref().map(|(i, _)| i);
    let obs = r.observable.as_ref();
    let result = match check {
        CheckName::FreeScheme => {
            let report = r.scheme.as_ref().expect("resolved").validate(tol, DEFAULT_MAX_MOMENT)?;
            CheckResult::new(check, report.verdict, to_value(&report))
        }
        CheckName::SecondLaw => second_law(r)?,
        CheckName::Covariant => classifier(check, classify::is_covariant_instrument(ins.expect("resolved"), hs, tol)?),
        CheckName::GibbsPreserving => classifier(
            check,
            classify::is_gibbs_preserving(ins.expect("resolved"), hs, r.beta, tol)?,
        ),
        CheckName::Nuclear => {
            let n = classify::is_nuclear(ins.expect("resolved"), tol)?;
            let mut detail = to_value(&n.verdict);
            if let Some(states) = &n.states {
                let states: Vec<Option<MatrixSpec>> = states
                    .iter()
                    .map(|s| s.as_ref().map(|s| MatrixSpec::from_matrix(s.matrix())))
                    .collect();
                detail["states"] = to_value(&states);
            }
            CheckResult::new(check, n.verdict.verdict, detail)
        }
        CheckName::Prop2 => classifier(check, classify::check_prop2(ins.expect("resolved"), hs, r.beta, tol)?),
        CheckName::QuasiComplete => classifier(check, classify::is_quasi_complete(ins.expect("resolved"), tol)?),
        CheckName::ThermalObservable => {
            classifier(check, classify::is_thermal_observable(obs.expect("resolved"), hs, tol)?)
        }
        CheckName::JointObservable => {
            let j = classify::joint_with_hamiltonian(obs.expect("resolved"), hs, tol)?;
            let verdict = j.observable_marginal_defect <= tol && j.energy_marginal_defect <= tol;
            let detail = json!({
                "outcomes": j.observable.outcomes(),
                "energies": j.energies,
                "observable_marginal_defect": j.observable_marginal_defect,
                "energy_marginal_defect": j.energy_marginal_defect,
                "tol": tol,
            });
            CheckResult::new(check, verdict, detail)
        }
        CheckName::PostProcessing => {
            let pp = classify::post_processing_decomposition(obs.expect("resolved"), hs, tol)?;
            let verdict = pp.reconstruction_defect <= tol && pp.column_sum_defect() <= r.validation_tol;
            let mut detail = to_value(&pp);
            detail["column_sum_defect"] = json!(pp.column_sum_defect());
            detail["tol"] = json!(tol);
            CheckResult::new(check, verdict, detail)
        }
        CheckName::Refine => {
            let f = classify::refine_to_rank_one(obs.expect("resolved"), classify::REFINE_TOL)?;
            let rank_one_defect = f.observable.rank_one_defect(tol);
            let verdict = f.coarse_graining_defect <= tol && rank_one_defect <= tol;
            let detail = json!({
                "outcomes": f.observable.outcomes(),
                "relabel": f.relabel,
                "coarse_graining_defect": f.coarse_graining_defect,
                "rank_one_defect": rank_one_defect,
                "tol": tol,
            });
            CheckResult::new(check, verdict, detail)
        }
        CheckName::Moments => {
            let scheme = r.scheme.as_ref().expect("resolved");
            let h = additive_hamiltonian(scheme.system_hamiltonian(), scheme.probe_hamiltonian());
            let defects = (1..=DEFAULT_MAX_MOMENT)
                .map(|k| energy_moment_defect(scheme.interaction(), &h, k))
                .collect::<Result<Vec<_>, _>>()?;
            let fixed_point_defect = scheme.fixed_point_defect();
            let verdict = defects.iter().all(|&d| d <= tol) && fixed_point_defect <= tol;
            let detail = json!({
                "energy_moment_defects": defects,
                "fixed_point_defect": fixed_point_defect,
                "tol": tol,
            });
            CheckResult::new(check, verdict, detail)
        }
        CheckName::SkewChain => {
            let ins = ins.expect("resolved");
            let rows = per_state(r, |rho| thermo::skew_chain(ins, hs, rho))?;
            let verdict = rows.iter().all(|(_, c)| c.first_slack >= -tol && c.second_slack >= -tol);
            let detail = json!({
                "min_first_slack": min_of(rows.iter().map(|(_, c)| c.first_slack)),
                "min_second_slack": min_of(rows.iter().map(|(_, c)| c.second_slack)),
                "tol": tol,
                "states": rows.iter().map(|(n, c)| json!({ "state": n, "chain": to_value(c) })).collect::<Vec<_>>(),
            });
            CheckResult::new(check, verdict, detail)
        }
        CheckName::HeatDuality => {
            let scheme = r.scheme.as_ref().expect("resolved");
            let rows = per_state(r, |rho| thermo::heat_absorbed(scheme, rho))?;
            let worst = max_of(rows.iter().map(|(_, h)| h.defect));
            let detail = json!({
                "max_defect": worst,
                "tol": tol,
                "states": rows.iter().map(|(n, h)| json!({ "state": n, "heat": to_value(h) })).collect::<Vec<_>>(),
            });
            CheckResult::new(check, worst <= tol, detail)
        }
    };
    Ok(result)
}

/// Runs `f` on a pool with `jobs` threads, or inline on the global pool.
pub(crate) fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, ScenarioError> {
    match jobs {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| ScenarioError::Invalid(format!("cannot start {n} worker threads: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

/// Resolves the scenario and runs its checks in the declared order.
///
/// Precondition failures inside a check are reported as that check's
/// result; every other library error is an input error.
pub fn run_scenario(scenario: &Scenario, options: &RunOptions) -> Result<RunReport, ScenarioError> {
    let start = Instant::now();
    let resolved = resolve(scenario)?;
    let results = with_jobs(options.jobs, || {
        scenario
            .checks
            .iter()
            .map(|&check| match run_check(check, &resolved) {
                Ok(res) => Ok(res),
                Err(e @ Error::Precondition { .. }) => Ok(CheckResult::precondition(check, &e)),
                Err(e) => Err(ScenarioError::Object {
                    context: format!("check {}", to_value(&check)),
                    source: e,
                }),
            })
            .collect::<Result<Vec<_>, _>>()
    })??;
    let failures: Vec<CheckName> = results.iter().filter(|r| !r.verdict).map(|r| r.check).collect();
    let summary = Summary {
        passed: results.len() - failures.len(),
        failed: failures.len(),
        failures,
    };
    Ok(RunReport {
        schema_version: SCHEMA_VERSION,
        version: env!("CARGO_PKG_VERSION").to_string(),
        scenario: scenario.clone(),
        results,
        summary,
        timing_ms: options.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scenario(text: &str) -> Scenario {
        Scenario::from_json(text, "inline").unwrap()
    }

    #[test]
    fn free_random_scheme_passes() {
        let s = scenario(
            r#"{"system_hamiltonian": [0, 1], "probe_hamiltonian": [0, 1], "beta": 1.0,
                "scheme": {"type": "random_block", "mixture_size": 3},
                "states": [{"type": "random", "count": 20}, {"type": "ground"}, {"type": "gibbs"}],
                "checks": ["free_scheme", "second_law", "covariance", "gibbs_preserving", "moments",
                           "skew_chain", "heat_duality"], "seed": 7}"#,
        );
        let report = run_scenario(&s, &RunOptions::default()).unwrap();
        assert!(report.all_passed(), "{:#?}", report.summary);
        assert_eq!(report.results.len(), 7);
        assert_eq!(report.results[1].detail["mode"], "free");
    }

    #[test]
    fn x_basis_luders_fails() {
        let text = r#"{"system_hamiltonian": [0, 1], "beta": 1.0,
            "instrument": {"type": "luders", "observable": {"type": "explicit", "outcomes": ["+", "-"],
              "effects": [[[0.5, 0.5], [0.5, 0.5]], [[0.5, -0.5], [-0.5, 0.5]]]}},
            "checks": ["covariant", "thermal_observable"]}"#;
        let report = run_scenario(&scenario(text), &RunOptions::default()).unwrap();
        assert!(!report.all_passed());
        assert!(report.results.iter().all(|r| !r.verdict));
        assert_eq!(report.summary.failures, vec![CheckName::Covariant, CheckName::ThermalObservable]);
    }

    #[test]
    fn preconditions_become_results() {
        let s = scenario(
            r#"{"system_hamiltonian": [0, 1], "beta": 1.0,
                "instrument": {"type": "luders", "observable": {"type": "computational"}},
                "checks": ["prop2", "nuclear"]}"#,
        );
        let report = run_scenario(&s, &RunOptions::default()).unwrap();
        assert_eq!(report.results[0].status, CheckStatus::Precondition);
        assert!(report.results[1].verdict);
    }

    #[test]
    fn missing_objects_are_input_errors() {
        let s = scenario(r#"{"system_hamiltonian": [0, 1], "beta": 1.0, "checks": ["covariant"]}"#);
        assert!(matches!(run_scenario(&s, &RunOptions::default()), Err(ScenarioError::Invalid(_))));
        let s = scenario(
            r#"{"system_hamiltonian": [0, 1], "beta": 1.0, "scheme": {"type": "swap"}, "checks": ["second_law"]}"#,
        );
        assert!(matches!(run_scenario(&s, &RunOptions::default()), Err(ScenarioError::Invalid(_))));
        let s = scenario(
            r#"{"system_hamiltonian": [0, 1], "probe_hamiltonian": [0, 1, 2], "beta": 1.0,
                "scheme": {"type": "swap"}, "checks": ["free_scheme"]}"#,
        );
        assert!(run_scenario(&s, &RunOptions::default()).is_err());
    }

    #[test]
    fn thread_count_does_not_change_the_report() {
        let s = scenario(
            r#"{"system_hamiltonian": [0, 1], "beta": 0.8, "scheme": {"type": "random_block", "mixture_size": 2},
                "states": [{"type": "random", "count": 12}], "checks": ["second_law", "skew_chain"], "seed": 3}"#,
        );
        let one = run_scenario(&s, &RunOptions { jobs: Some(1), timing: false }).unwrap();
        let four = run_scenario(&s, &RunOptions { jobs: Some(4), timing: false }).unwrap();
        assert_eq!(serde_json::to_string(&one).unwrap(), serde_json::to_string(&four).unwrap());
    }
}
