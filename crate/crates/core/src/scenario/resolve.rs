//! Turning a [`Scenario`] into validated library objects.

use crate::json::MatrixSpec;
use crate::linalg::{eig_hermitian, hermitian_part, ComplexMatrix, DEFAULT_CLUSTER_TOL};
use crate::objects::{gibbs_state, Instrument, Observable, Operation, State};
use crate::random::{
    derive_seed, random_commuting_observable, random_diagonal_povm, random_pure_state, random_state, rng,
};
use crate::scheme::{random_free_scheme, trivial_scheme_with_tol, MeasurementScheme};
use crate::KrausChannel;

use super::{CheckName, InstrumentSpec, ObservableSpec, Scenario, ScenarioError, SchemeSpec, StateSpec};

// Stream indices for `derive_seed(scenario.seed, _)`.
const SCHEME_STREAM: u64 = 0;
const POINTER_STREAM: u64 = 1;
const OBSERVABLE_STREAM: u64 = 2;
const INSTRUMENT_STREAM: u64 = 3;
const STATE_STREAM: u64 = 16;

/// Where the instrument under test came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstrumentSource {
    Explicit,
    Scheme,
}

#[derive(Debug, Clone)]
pub struct Resolved {
    pub system_hamiltonian: ComplexMatrix,
    pub beta: f64,
    pub scheme: Option<MeasurementScheme>,
    pub instrument: Option<(Instrument, InstrumentSource)>,
    pub observable: Option<Observable>,
    pub states: Vec<(String, State)>,
    pub theorem_tol: f64,
    pub validation_tol: f64,
}

fn matrix(spec: &MatrixSpec, what: &str) -> Result<ComplexMatrix, ScenarioError> {
    spec.to_matrix().map_err(ScenarioError::object(what))
}

fn hamiltonian(spec: &MatrixSpec, what: &str) -> Result<ComplexMatrix, ScenarioError> {
    let m = matrix(spec, what)?;
    if m.nrows() != m.ncols() {
        return Err(ScenarioError::Invalid(format!("{what} is {}x{}, expected square", m.nrows(), m.ncols())));
    }
    hermitian_part(&m, what).map_err(ScenarioError::object(what))
}

fn observable(
    spec: &ObservableSpec,
    h: &ComplexMatrix,
    seed: u64,
    tol: f64,
    what: &str,
) -> Result<Observable, ScenarioError> {
    let d = h.nrows();
    let wrap = ScenarioError::object(what);
    match spec {
        ObservableSpec::Explicit { outcomes, effects } => {
            let effects = effects
                .iter()
                .map(|e| matrix(e, what))
                .collect::<Result<Vec<_>, _>>()?;
            if let Some(e) = effects.iter().find(|e| e.shape() != (d, d)) {
                return Err(ScenarioError::Invalid(format!(
                    "{what}: effect is {}x{} but the Hamiltonian is {d}x{d}",
                    e.nrows(),
                    e.ncols()
                )));
            }
            Observable::with_tol(outcomes.clone(), effects, tol).map_err(wrap)
        }
        ObservableSpec::Spectral => Observable::spectral(h, DEFAULT_CLUSTER_TOL).map_err(wrap),
        ObservableSpec::Computational => Ok(Observable::computational(d)),
        ObservableSpec::Trivial { outcomes } => {
            nonzero(*outcomes, what)?;
            Ok(Observable::trivial(d, *outcomes))
        }
        ObservableSpec::Diagonal { outcomes, seed: own } => {
            nonzero(*outcomes, what)?;
            Ok(random_diagonal_povm(d, *outcomes, &mut rng(own.unwrap_or(seed))))
        }
        ObservableSpec::Commuting { outcomes, seed: own } => {
            nonzero(*outcomes, what)?;
            Ok(random_commuting_observable(h, *outcomes, &mut rng(own.unwrap_or(seed))))
        }
    }
}

fn nonzero(n: usize, what: &str) -> Result<(), ScenarioError> {
    if n == 0 {
        return Err(ScenarioError::Invalid(format!("{what}: an observable needs at least one outcome")));
    }
    Ok(())
}

fn scheme(s: &Scenario, spec: &SchemeSpec, hs: &ComplexMatrix) -> Result<MeasurementScheme, ScenarioError> {
    let tol = s.tolerances.validation;
    let base = s.seed;
    let ha = match &s.probe_hamiltonian {
        Some(m) => hamiltonian(m, "probe_hamiltonian")?,
        None => hs.clone(),
    };
    let pointer_seed = derive_seed(base, POINTER_STREAM);
    let wrap = ScenarioError::object("scheme");
    match spec {
        SchemeSpec::Swap { pointer } => {
            if ha.nrows() != hs.nrows() {
                return Err(ScenarioError::Invalid(format!(
                    "scheme: swap needs equal system and probe dimensions, got {} and {}",
                    hs.nrows(),
                    ha.nrows()
                )));
            }
            let z = observable(pointer, &ha, pointer_seed, tol, "scheme.pointer")?;
            MeasurementScheme::new(hs.clone(), ha, s.beta, KrausChannel::swap(hs.nrows()), z).map_err(wrap)
        }
        SchemeSpec::RandomBlock {
            pointer,
            mixture_size,
            seed,
        } => {
            let z = observable(pointer, &ha, pointer_seed, tol, "scheme.pointer")?;
            let seed = seed.unwrap_or_else(|| derive_seed(base, SCHEME_STREAM));
            random_free_scheme(hs, &ha, s.beta, &z, seed, *mixture_size).map_err(wrap)
        }
        SchemeSpec::Kraus { kraus, pointer } => {
            let z = observable(pointer, &ha, pointer_seed, tol, "scheme.pointer")?;
            let kraus = kraus
                .iter()
                .map(|k| matrix(k, "scheme.kraus"))
                .collect::<Result<Vec<_>, _>>()?;
            let channel = KrausChannel::with_tol(kraus, tol).map_err(ScenarioError::object("scheme.kraus"))?;
            MeasurementScheme::new(hs.clone(), ha, s.beta, channel, z).map_err(wrap)
        }
        SchemeSpec::Trivial { observable: e } => {
            let e = observable(e, hs, derive_seed(base, OBSERVABLE_STREAM), tol, "scheme.observable")?;
            trivial_scheme_with_tol(&e, hs, s.beta, tol).map_err(wrap)
        }
    }
}

fn instrument(s: &Scenario, spec: &InstrumentSpec, hs: &ComplexMatrix) -> Result<Instrument, ScenarioError> {
    let tol = s.tolerances.validation;
    let d = hs.nrows();
    match spec {
        InstrumentSpec::Luders { observable: e } => {
            let e = observable(e, hs, derive_seed(s.seed, INSTRUMENT_STREAM), tol, "instrument.observable")?;
            Instrument::luders(&e).map_err(ScenarioError::object("instrument"))
        }
        InstrumentSpec::Kraus { outcomes, kraus_sets } => {
            let mut ops = Vec::with_capacity(kraus_sets.len());
            for set in kraus_sets {
                let kraus = set
                    .iter()
                    .map(|k| matrix(k, "instrument.kraus_sets"))
                    .collect::<Result<Vec<_>, _>>()?;
                if let Some(k) = kraus.iter().find(|k| k.shape() != (d, d)) {
                    return Err(ScenarioError::Invalid(format!(
                        "instrument: Kraus operator is {}x{} but the system is {d}-dimensional",
                        k.nrows(),
                        k.ncols()
                    )));
                }
                ops.push(Operation::new(kraus).map_err(ScenarioError::object("instrument"))?);
            }
            Instrument::from_operations(outcomes.clone(), ops, tol).map_err(ScenarioError::object("instrument"))
        }
    }
}

fn states(s: &Scenario, hs: &ComplexMatrix) -> Result<Vec<(String, State)>, ScenarioError> {
    let d = hs.nrows();
    let tol = s.tolerances.validation;
    let mut out = Vec::new();
    for (i, spec) in s.states.iter().enumerate() {
        match spec {
            StateSpec::Explicit { name, matrix: m } => {
                let m = matrix(m, name)?;
                if m.shape() != (d, d) {
                    return Err(ScenarioError::Invalid(format!(
                        "state `{name}` is {}x{} but the system is {d}-dimensional",
                        m.nrows(),
                        m.ncols()
                    )));
                }
                let rho = State::with_tol(m, tol).map_err(ScenarioError::object(format!("state `{name}`")))?;
                out.push((name.clone(), rho));
            }
            StateSpec::Random { count, seed, pure } => {
                let mut r = rng(seed.unwrap_or_else(|| derive_seed(s.seed, STATE_STREAM + i as u64)));
                for k in 0..*count {
                    let rho = if *pure { random_pure_state(d, &mut r) } else { random_state(d, &mut r) };
                    out.push((format!("random{i}.{k}"), rho));
                }
            }
            StateSpec::Ground => {
                let sd = eig_hermitian(hs, DEFAULT_CLUSTER_TOL).map_err(ScenarioError::object("ground state"))?;
                let p = &sd.projectors[0];
                out.push(("ground".into(), State::trusted(p.unscale(sd.multiplicities[0] as f64))));
            }
            StateSpec::Gibbs => {
                out.push(("gibbs".into(), gibbs_state(hs, s.beta).map_err(ScenarioError::object("gibbs state"))?));
            }
            StateSpec::MaximallyMixed => out.push(("maximally_mixed".into(), State::maximally_mixed(d))),
        }
    }
    Ok(out)
}

fn requires(check: CheckName) -> (bool, bool, bool, bool) {
    // (scheme, instrument, observable, states)
    use CheckName::*;
    match check {
        FreeScheme | Moments => (true, false, false, false),
        HeatDuality => (true, false, false, true),
        SecondLaw => (false, true, false, true),
        SkewChain => (false, true, false, true),
        Covariant | GibbsPreserving | Nuclear | Prop2 | QuasiComplete => (false, true, false, false),
        ThermalObservable | JointObservable | PostProcessing | Refine => (false, false, true, false),
    }
}

/// Builds and validates every object the scenario names, and checks that
/// each requested check has what it needs.
pub fn resolve(s: &Scenario) -> Result<Resolved, ScenarioError> {
    if !(s.beta.is_finite() && s.beta > 0.0) {
        return Err(ScenarioError::Invalid(format!("beta must be finite and positive, got {}", s.beta)));
    }
    for (name, tol) in [("theorem", s.tolerances.theorem), ("validation", s.tolerances.validation)] {
        if !(tol.is_finite() && tol >= 0.0) {
            return Err(ScenarioError::Invalid(format!("tolerances.{name} must be finite and non-negative")));
        }
    }
    let hs = hamiltonian(&s.system_hamiltonian, "system_hamiltonian")?;
    let scheme = s.scheme.as_ref().map(|spec| scheme(s, spec, &hs)).transpose()?;
    let instrument = match (&s.instrument, &scheme) {
        (Some(spec), _) => Some((instrument(s, spec, &hs)?, InstrumentSource::Explicit)),
        (None, Some(sc)) => Some((
            sc.induced_instrument().map_err(ScenarioError::object("scheme"))?,
            InstrumentSource::Scheme,
        )),
        (None, None) => None,
    };
    let observable = match (&s.observable, &instrument) {
        (Some(spec), _) => Some(observable(
            spec,
            &hs,
            derive_seed(s.seed, OBSERVABLE_STREAM),
            s.tolerances.validation,
            "observable",
        )?),
        (None, Some((ins, _))) => Some(ins.induced_observable().map_err(ScenarioError::object("instrument"))?),
        (None, None) => None,
    };
    let states = states(s, &hs)?;

    for &check in &s.checks {
        let (needs_scheme, needs_instrument, needs_observable, needs_states) = requires(check);
        let name = serde_json::to_value(check).expect("check names serialize");
        if needs_scheme && scheme.is_none() {
            return Err(ScenarioError::Invalid(format!("check {name} needs a scheme")));
        }
        if needs_instrument && instrument.is_none() {
            return Err(ScenarioError::Invalid(format!("check {name} needs a scheme or an instrument")));
        }
        if needs_observable && observable.is_none() {
            return Err(ScenarioError::Invalid(format!(
                "check {name} needs an observable, an instrument or a scheme"
            )));
        }
        if needs_states && states.is_empty() {
            return Err(ScenarioError::Invalid(format!("check {name} needs at least one state")));
        }
    }

    Ok(Resolved {
        system_hamiltonian: hs,
        beta: s.beta,
        scheme,
        instrument,
        observable,
        states,
        theorem_tol: s.tolerances.theorem,
        validation_tol: s.tolerances.validation,
    })
}
