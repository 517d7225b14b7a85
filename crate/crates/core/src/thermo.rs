//! Work, heat and information functionals of instruments.
//!
//! Energies share the units of the Hamiltonians, `β` has inverse energy
//! units, and entropic terms enter energies as `β⁻¹ · (nats)`.

use serde::{Deserialize, Serialize};

use crate::entropy::{classical_relative_entropy, relative_entropy, von_neumann_entropy};
use crate::error::{Error, Result};
use crate::linalg::{self, psd_sqrt, trace_product, ComplexMatrix};
use crate::objects::{gibbs_state, Instrument, Observable, State};
use crate::scheme::{MeasurementScheme, DEFAULT_MAX_MOMENT};

/// Outcomes less likely than this are left out of conditional sums.
pub const MIN_PROBABILITY: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WorkReport {
    /// `W_ρ = β⁻¹ S(ρ‖τ_β)`.
    pub extractable_work: f64,
    /// `⟨W⟩ = β⁻¹ Σ_x p(x) S(ρ_x‖τ_β)`.
    pub average_extractable_work: f64,
    /// `D = Σ_x p(x) ln(p(x)/q(x))`, `q(x) = tr[E_x τ_β]`.
    pub outcome_divergence: f64,
    /// Heat absorbed by the system.
    pub heat: f64,
    /// `I = S(ρ) − Σ_x p(x) S(ρ_x)`.
    pub groenewold_gain: f64,
    pub beta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SecondLawReport {
    /// `W − β⁻¹D − ⟨W⟩`.
    pub prop1_slack: f64,
    /// `|⟨W⟩ − W − Q − β⁻¹I|`.
    pub eq5_identity_defect: f64,
    /// `−β⁻¹D − Q − β⁻¹I`.
    pub eq5_bound_slack: f64,
    /// `−β⁻¹I − Q`.
    pub heat_bound_slack: f64,
    pub tol: f64,
    pub verdict: bool,
}

impl SecondLawReport {
    pub fn from_work(w: &WorkReport, tol: f64) -> Self {
        let t = 1.0 / w.beta;
        let prop1_slack = w.extractable_work - t * w.outcome_divergence - w.average_extractable_work;
        let eq5_identity_defect =
            (w.average_extractable_work - w.extractable_work - w.heat - t * w.groenewold_gain).abs();
        let eq5_bound_slack = -t * w.outcome_divergence - w.heat - t * w.groenewold_gain;
        let heat_bound_slack = -t * w.groenewold_gain - w.heat;
        let verdict = prop1_slack >= -tol
            && eq5_identity_defect <= tol
            && eq5_bound_slack >= -tol
            && heat_bound_slack >= -tol;
        SecondLawReport {
            prop1_slack,
            eq5_identity_defect,
            eq5_bound_slack,
            heat_bound_slack,
            tol,
            verdict,
        }
    }
}

/// Heat absorbed by the system, from the probe's energy loss, with the
/// system-side energy change for comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HeatReport {
    /// `tr[H_A(ξ_β − Λ(ρ))]`.
    pub heat: f64,
    /// `tr[H_S(ℐ_𝒳(ρ) − ρ)]`.
    pub system_energy_change: f64,
    pub defect: f64,
}

/// Conditional state `ρ_x` with its probability.
#[derive(Debug, Clone)]
pub struct Conditional {
    pub outcome: usize,
    pub probability: f64,
    pub state: State,
}

/// `(p(x), ρ_x)` for every outcome with `p(x) > MIN_PROBABILITY`.
pub fn conditional_states(ins: &Instrument, rho: &State) -> Result<Vec<Conditional>> {
    let mut out = Vec::new();
    for (x, m) in ins.outputs(rho)?.into_iter().enumerate() {
        let p = m.trace().re;
        if p > MIN_PROBABILITY {
            out.push(Conditional {
                outcome: x,
                probability: p,
                state: State::trusted(m.unscale(p)),
            });
        }
    }
    Ok(out)
}

fn check_beta(beta: f64) -> Result<()> {
    if !(beta.is_finite() && beta > 0.0) {
        return Err(Error::Domain(format!("inverse temperature must be finite and positive, got {beta}")));
    }
    Ok(())
}

fn check_dims(rho: &State, hs: &ComplexMatrix) -> Result<()> {
    if hs.shape() != (rho.dim(), rho.dim()) {
        return Err(Error::Dimension(format!(
            "state of dimension {} with a {}x{} Hamiltonian",
            rho.dim(),
            hs.nrows(),
            hs.ncols()
        )));
    }
    Ok(())
}

/// `W_ρ = β⁻¹ S(ρ‖τ_β)`.
pub fn extractable_work(rho: &State, hs: &ComplexMatrix, beta: f64) -> Result<f64> {
    check_beta(beta)?;
    check_dims(rho, hs)?;
    let tau = gibbs_state(hs, beta)?;
    Ok(relative_entropy(rho, &tau)? / beta)
}

/// `⟨W⟩ = β⁻¹ Σ_x p(x) S(ρ_x‖τ_β)`.
pub fn average_extractable_work(ins: &Instrument, rho: &State, hs: &ComplexMatrix, beta: f64) -> Result<f64> {
    check_beta(beta)?;
    check_dims(rho, hs)?;
    let tau = gibbs_state(hs, beta)?;
    let mut acc = 0.0;
    for cond in conditional_states(ins, rho)? {
        acc += cond.probability * relative_entropy(&cond.state, &tau)?;
    }
    Ok(acc / beta)
}

/// Classical relative entropy between the outcome distributions of `E` in
/// `ρ` and in `τ_β`. Zero effects are skipped.
pub fn outcome_divergence(e: &Observable, rho: &State, hs: &ComplexMatrix, beta: f64) -> Result<f64> {
    check_beta(beta)?;
    check_dims(rho, hs)?;
    let tau = gibbs_state(hs, beta)?;
    let p = e.probabilities(rho)?;
    let q = e.probabilities(&tau)?;
    Ok(classical_relative_entropy(&p, &q))
}

/// Heat absorbed by the system during the measurement interaction.
pub fn heat_absorbed(scheme: &MeasurementScheme, rho: &State) -> Result<HeatReport> {
    check_dims(rho, scheme.system_hamiltonian())?;
    let xi = scheme.probe_state();
    let probe_after = scheme.conjugate_channel()?.apply(rho)?;
    let ha = scheme.probe_hamiltonian();
    let heat = xi.expectation(ha) - probe_after.expectation(ha);
    let system_after = scheme.induced_instrument()?.total_channel().apply(rho)?;
    let hs = scheme.system_hamiltonian();
    let system_energy_change = system_after.expectation(hs) - rho.expectation(hs);
    Ok(HeatReport {
        heat,
        system_energy_change,
        defect: (heat - system_energy_change).abs(),
    })
}

/// `I(ℐ, ρ) = S(ρ) − Σ_x p(x) S(ρ_x)`.
pub fn groenewold_gain(ins: &Instrument, rho: &State) -> Result<f64> {
    let mut avg = 0.0;
    for cond in conditional_states(ins, rho)? {
        avg += cond.probability * von_neumann_entropy(&cond.state);
    }
    Ok(von_neumann_entropy(rho) - avg)
}

/// Wigner–Yanase skew information `tr[ρH²] − tr[√ρ H √ρ H]` of a positive,
/// possibly sub-normalized operator.
pub fn skew_information(h: &ComplexMatrix, rho: &ComplexMatrix) -> Result<f64> {
    linalg::ensure_same_dim(h, rho, "skew information")?;
    let rho = linalg::hermitian_part(rho, "skew information argument")?;
    let (values, _) = linalg::eigh(&rho);
    let tol = crate::objects::VALIDATION_TOL;
    if values[0] < -tol {
        return Err(Error::validation("skew information argument", "positivity", -values[0]));
    }
    let tr = rho.trace().re;
    if tr > 1.0 + tol {
        return Err(Error::validation("skew information argument", "trace at most one", tr - 1.0));
    }
    let root = psd_sqrt(&rho);
    let h2 = h * h;
    let first = trace_product(&rho, &h2).re;
    let second = trace_product(&(&root * h * &root), h).re;
    Ok(first - second)
}

/// The asymmetry chain `I(ρ) ≥ Σ_x I(ℐ_x(ρ)) ≥ I(ℐ_𝒳(ρ))` for the
/// Wigner–Yanase skew information.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SkewChain {
    pub input: f64,
    pub outcome_sum: f64,
    pub total: f64,
    /// `input − outcome_sum`.
    pub first_slack: f64,
    /// `outcome_sum − total`.
    pub second_slack: f64,
}

pub fn skew_chain(ins: &Instrument, h: &ComplexMatrix, rho: &State) -> Result<SkewChain> {
    let input = skew_information(h, rho.matrix())?;
    let outputs = ins.outputs(rho)?;
    let mut outcome_sum = 0.0;
    for out in &outputs {
        outcome_sum += skew_information(h, out)?;
    }
    let total_state = outputs.iter().fold(linalg::zeros(rho.dim()), |acc, m| acc + m);
    let total = skew_information(h, &total_state)?;
    Ok(SkewChain {
        input,
        outcome_sum,
        total,
        first_slack: input - outcome_sum,
        second_slack: outcome_sum - total,
    })
}

/// Work and heat quantities of `ins` on `ρ`, with `heat` supplied by the
/// caller.
fn work_report(ins: &Instrument, rho: &State, hs: &ComplexMatrix, beta: f64, heat: f64) -> Result<WorkReport> {
    let e = ins.induced_observable()?;
    Ok(WorkReport {
        extractable_work: extractable_work(rho, hs, beta)?,
        average_extractable_work: average_extractable_work(ins, rho, hs, beta)?,
        outcome_divergence: outcome_divergence(&e, rho, hs, beta)?,
        heat,
        groenewold_gain: groenewold_gain(ins, rho)?,
        beta,
    })
}

/// Second-law quantities for a free scheme. Refuses schemes that fail the
/// freeness check at `tol`, since the inequalities are only theorems for
/// thermal instruments.
pub fn second_law_report(scheme: &MeasurementScheme, rho: &State, tol: f64) -> Result<(SecondLawReport, WorkReport)> {
    let free = scheme.validate(tol, DEFAULT_MAX_MOMENT)?;
    if !free.verdict {
        let defect = free
            .energy_conservation_defects
            .iter()
            .copied()
            .fold(free.bistochastic_defect.max(free.yanase_defect), f64::max);
        return Err(Error::precondition("thermodynamically free scheme", defect, tol));
    }
    let ins = scheme.induced_instrument()?;
    second_law_report_for(scheme, &ins, rho, tol)
}

/// As [`second_law_report`], with the scheme's induced instrument already
/// computed. The caller is responsible for freeness.
pub fn second_law_report_for(
    scheme: &MeasurementScheme,
    ins: &Instrument,
    rho: &State,
    tol: f64,
) -> Result<(SecondLawReport, WorkReport)> {
    let heat = heat_absorbed(scheme, rho)?.heat;
    let work = work_report(ins, rho, scheme.system_hamiltonian(), scheme.beta(), heat)?;
    Ok((SecondLawReport::from_work(&work, tol), work))
}

/// The same quantities for an arbitrary instrument, with heat taken as the
/// system's energy change. No freeness is required, so the verdict is
/// informational only; non-thermal instruments can violate the bounds.
pub fn diagnostic_report(
    ins: &Instrument,
    rho: &State,
    hs: &ComplexMatrix,
    beta: f64,
    tol: f64,
) -> Result<(SecondLawReport, WorkReport)> {
    let after = ins.total_channel().apply(rho)?;
    let heat = after.expectation(hs) - rho.expectation(hs);
    let work = work_report(ins, rho, hs, beta, heat)?;
    Ok((SecondLawReport::from_work(&work, tol), work))
}

/// `S(Φ_𝒳(ρ) ‖ Φ_𝒳(τ_β))` for the classical-register dilation
/// `Φ_x(ρ) = ℐ_x(ρ) ⊗ |x⟩⟨x|`, evaluated on the block-diagonal operators.
pub fn register_divergence(ins: &Instrument, rho: &State, hs: &ComplexMatrix, beta: f64) -> Result<f64> {
    check_beta(beta)?;
    check_dims(rho, hs)?;
    let tau = gibbs_state(hs, beta)?;
    let d = rho.dim();
    let n = ins.len();
    let mut big_rho = ComplexMatrix::zeros(d * n, d * n);
    let mut big_tau = ComplexMatrix::zeros(d * n, d * n);
    for (x, (a, b)) in ins.outputs(rho)?.iter().zip(ins.outputs(&tau)?.iter()).enumerate() {
        big_rho.view_mut((x * d, x * d), (d, d)).copy_from(a);
        big_tau.view_mut((x * d, x * d), (d, d)).copy_from(b);
    }
    relative_entropy(&State::trusted(big_rho), &State::trusted(big_tau))
}
