//! Measurement schemes and the thermodynamically free subclass.
//!
//! A scheme `(H_S, H_A, β, ℰ, Z)` measures the system by preparing the probe
//! in `ξ_β = gibbs_state(H_A, β)`, applying the interaction `ℰ` to
//! `ρ ⊗ ξ_β`, and reading the pointer `Z` on the probe:
//!
//! `ℐ_x(ρ) = tr_A[(1 ⊗ Z_x) ℰ(ρ ⊗ ξ_β)]`.
//!
//! The probe state is never supplied by the caller, so the Gibbs-probe
//! condition holds for every scheme by construction.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json;
use crate::linalg::{
    self, commutator_defect, eig_hermitian, frobenius, hermitian_part, kron, psd_sqrt, ComplexMatrix,
    DEFAULT_CLUSTER_TOL,
};
use crate::objects::{gibbs_state, Instrument, KrausChannel, Observable, Operation, State, VALIDATION_TOL};
use crate::random::{random_simplex, random_unitary, rng};

/// Highest energy moment checked by default.
pub const DEFAULT_MAX_MOMENT: usize = 4;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawScheme", into = "RawScheme")]
pub struct MeasurementScheme {
    system_hamiltonian: ComplexMatrix,
    probe_hamiltonian: ComplexMatrix,
    beta: f64,
    interaction: KrausChannel,
    pointer: Observable,
}

#[derive(Serialize, Deserialize)]
struct RawScheme {
    #[serde(with = "json::matrix")]
    system_hamiltonian: ComplexMatrix,
    #[serde(with = "json::matrix")]
    probe_hamiltonian: ComplexMatrix,
    beta: f64,
    interaction: KrausChannel,
    pointer: Observable,
}

impl TryFrom<RawScheme> for MeasurementScheme {
    type Error = Error;

    fn try_from(r: RawScheme) -> Result<Self> {
        MeasurementScheme::new(r.system_hamiltonian, r.probe_hamiltonian, r.beta, r.interaction, r.pointer)
    }
}

impl From<MeasurementScheme> for RawScheme {
    fn from(s: MeasurementScheme) -> Self {
        RawScheme {
            system_hamiltonian: s.system_hamiltonian,
            probe_hamiltonian: s.probe_hamiltonian,
            beta: s.beta,
            interaction: s.interaction,
            pointer: s.pointer,
        }
    }
}

/// Outcome of [`MeasurementScheme::validate`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FreeSchemeReport {
    /// The probe is always its Gibbs state; recorded for completeness.
    pub gibbs_probe_ok: bool,
    /// Larger of the trace-preservation and unitality defects of `ℰ`.
    pub bistochastic_defect: f64,
    /// `‖ℰ*(H^k) − H^k‖_F` for `k = 1..=max_moment`.
    pub energy_conservation_defects: Vec<f64>,
    /// `max_x ‖[Z_x, H_A]‖_F`.
    pub yanase_defect: f64,
    pub tol: f64,
    pub verdict: bool,
}

impl MeasurementScheme {
    pub fn new(
        system_hamiltonian: ComplexMatrix,
        probe_hamiltonian: ComplexMatrix,
        beta: f64,
        interaction: KrausChannel,
        pointer: Observable,
    ) -> Result<Self> {
        let system_hamiltonian = hermitian_part(&system_hamiltonian, "system Hamiltonian")?;
        let probe_hamiltonian = hermitian_part(&probe_hamiltonian, "probe Hamiltonian")?;
        if !(beta.is_finite() && beta > 0.0) {
            return Err(Error::Domain(format!("inverse temperature must be finite and positive, got {beta}")));
        }
        let ds = system_hamiltonian.nrows();
        let da = probe_hamiltonian.nrows();
        if interaction.dim_in() != ds * da || interaction.dim_out() != ds * da {
            return Err(Error::Dimension(format!(
                "interaction acts on dimension {}→{}, expected {}",
                interaction.dim_in(),
                interaction.dim_out(),
                ds * da
            )));
        }
        if pointer.dim() != da {
            return Err(Error::Dimension(format!(
                "pointer acts on dimension {}, probe has dimension {da}",
                pointer.dim()
            )));
        }
        Ok(MeasurementScheme {
            system_hamiltonian,
            probe_hamiltonian,
            beta,
            interaction,
            pointer,
        })
    }

    pub fn system_hamiltonian(&self) -> &ComplexMatrix {
        &self.system_hamiltonian
    }

    pub fn probe_hamiltonian(&self) -> &ComplexMatrix {
        &self.probe_hamiltonian
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn interaction(&self) -> &KrausChannel {
        &self.interaction
    }

    pub fn pointer(&self) -> &Observable {
        &self.pointer
    }

    pub fn system_dim(&self) -> usize {
        self.system_hamiltonian.nrows()
    }

    pub fn probe_dim(&self) -> usize {
        self.probe_hamiltonian.nrows()
    }

    /// `ξ_β`.
    pub fn probe_state(&self) -> State {
        gibbs_state(&self.probe_hamiltonian, self.beta).expect("validated Hamiltonian and beta")
    }

    /// `τ_β`, the Gibbs state of the system at the scheme's temperature.
    pub fn system_gibbs_state(&self) -> State {
        gibbs_state(&self.system_hamiltonian, self.beta).expect("validated Hamiltonian and beta")
    }

    /// `H = H_S ⊗ 1 + 1 ⊗ H_A`.
    pub fn total_hamiltonian(&self) -> ComplexMatrix {
        additive_hamiltonian(&self.system_hamiltonian, &self.probe_hamiltonian)
    }

    /// Checks the freeness conditions with absolute tolerance `tol`, energy
    /// moments up to `max_moment`.
    pub fn validate(&self, tol: f64, max_moment: usize) -> Result<FreeSchemeReport> {
        let bis = self.interaction.bistochastic_report(tol);
        let h = self.total_hamiltonian();
        let energy_conservation_defects = (1..=max_moment)
            .map(|k| energy_moment_defect(&self.interaction, &h, k))
            .collect::<Result<Vec<_>>>()?;
        let mut yanase_defect: f64 = 0.0;
        for z in self.pointer.effects() {
            yanase_defect = yanase_defect.max(commutator_defect(z, &self.probe_hamiltonian)?);
        }
        let bistochastic_defect = bis.trace_defect.max(bis.unital_defect);
        let verdict = bistochastic_defect <= tol
            && energy_conservation_defects.iter().all(|&d| d <= tol)
            && yanase_defect <= tol;
        Ok(FreeSchemeReport {
            gibbs_probe_ok: true,
            bistochastic_defect,
            energy_conservation_defects,
            yanase_defect,
            tol,
            verdict,
        })
    }

    /// The instrument the scheme implements, in Kraus form
    /// `M = √p_j (1 ⊗ ⟨k|√Z_x) K_i (1 ⊗ |ξ_j⟩)` with `ξ_β = Σ_j p_j |ξ_j⟩⟨ξ_j|`.
    pub fn induced_instrument(&self) -> Result<Instrument> {
        let ds = self.system_dim();
        let da = self.probe_dim();
        let id_s = linalg::identity(ds);
        let embeddings = self.probe_embeddings();
        let mut operations = Vec::with_capacity(self.pointer.len());
        for z in self.pointer.effects() {
            let root = psd_sqrt(z);
            let mut kraus = Vec::new();
            for k in 0..da {
                let readout = kron(&id_s, &root.rows(k, 1).into_owned());
                for big in self.interaction.kraus() {
                    let left = &readout * big;
                    for embed in &embeddings {
                        kraus.push(&left * embed);
                    }
                }
            }
            operations.push(Operation::new(kraus)?);
        }
        Instrument::from_operations(self.pointer.outcomes().to_vec(), operations, VALIDATION_TOL)
    }

    /// `Λ(ρ) = tr_S[ℰ(ρ ⊗ ξ_β)]`, a channel from the system to the probe.
    pub fn conjugate_channel(&self) -> Result<KrausChannel> {
        let ds = self.system_dim();
        let id_a = linalg::identity(self.probe_dim());
        let embeddings = self.probe_embeddings();
        let mut kraus = Vec::new();
        for s in 0..ds {
            let mut bra = ComplexMatrix::zeros(1, ds);
            bra[(0, s)] = linalg::c(1.0, 0.0);
            let trace_out = kron(&bra, &id_a);
            for big in self.interaction.kraus() {
                let left = &trace_out * big;
                for embed in &embeddings {
                    kraus.push(&left * embed);
                }
            }
        }
        KrausChannel::from_operation(Operation::new(kraus)?, VALIDATION_TOL)
    }

    /// `‖ℰ(τ_β ⊗ ξ_β) − τ_β ⊗ ξ_β‖_F`.
    pub fn fixed_point_defect(&self) -> f64 {
        let joint = self.system_gibbs_state().tensor(&self.probe_state());
        let out = self
            .interaction
            .apply_matrix(joint.matrix())
            .expect("validated dimensions");
        frobenius(&(out - joint.matrix()))
    }

    /// `√p_j (1_S ⊗ |ξ_j⟩)` for each eigenvector of the probe state.
    fn probe_embeddings(&self) -> Vec<ComplexMatrix> {
        let xi = self.probe_state();
        let (weights, vectors) = linalg::eigh(xi.matrix());
        let id_s = linalg::identity(self.system_dim());
        weights
            .iter()
            .enumerate()
            .filter(|(_, &w)| w > 0.0)
            .map(|(j, &w)| kron(&id_s, &vectors.columns(j, 1).into_owned()).scale(w.sqrt()))
            .collect()
    }
}

/// `H_S ⊗ 1 + 1 ⊗ H_A`.
pub fn additive_hamiltonian(hs: &ComplexMatrix, ha: &ComplexMatrix) -> ComplexMatrix {
    kron(hs, &linalg::identity(ha.nrows())) + kron(&linalg::identity(hs.nrows()), ha)
}

/// Free-function form of [`MeasurementScheme::validate`].
pub fn validate_free_scheme(scheme: &MeasurementScheme, tol: f64, max_moment: usize) -> Result<FreeSchemeReport> {
    scheme.validate(tol, max_moment)
}

/// `‖Φ*(H^k) − H^k‖_F`.
pub fn energy_moment_defect(ch: &KrausChannel, h: &ComplexMatrix, k: usize) -> Result<f64> {
    let d = linalg::ensure_square(h, "Hamiltonian")?;
    let mut power = linalg::identity(d);
    for _ in 0..k {
        power = &power * h;
    }
    let image = ch.apply_dual(&power)?;
    Ok(frobenius(&(image - power)))
}

/// The swap scheme: probe identical to the system, `H_A = H_S`, pointer
/// `Z = E`, interaction the unitary swap. It implements the thermalising
/// instrument `ρ ↦ tr[E_x ρ] τ_β`.
pub fn trivial_scheme(e: &Observable, hs: &ComplexMatrix, beta: f64) -> Result<MeasurementScheme> {
    trivial_scheme_with_tol(e, hs, beta, VALIDATION_TOL)
}

pub fn trivial_scheme_with_tol(e: &Observable, hs: &ComplexMatrix, beta: f64, tol: f64) -> Result<MeasurementScheme> {
    let d = linalg::ensure_square(hs, "system Hamiltonian")?;
    if e.dim() != d {
        return Err(Error::Dimension(format!("observable dimension {} vs Hamiltonian {d}", e.dim())));
    }
    let mut worst: f64 = 0.0;
    for ex in e.effects() {
        worst = worst.max(commutator_defect(ex, hs)?);
    }
    if worst > tol {
        return Err(Error::precondition("[E_x, H_S] = 0", worst, tol));
    }
    MeasurementScheme::new(hs.clone(), hs.clone(), beta, KrausChannel::swap(d), e.clone())
}

/// Draws a free scheme whose interaction is a random mixture of unitaries
/// that are block-diagonal on the eigenspaces of `H_S ⊗ 1 + 1 ⊗ H_A`.
///
/// Each unitary is Haar-random inside every eigenspace and the mixture
/// weights are uniform on the simplex. All randomness comes from `seed`.
/// Nondegenerate total spectra only admit diagonal (phase) unitaries; use
/// resonant Hamiltonians for nontrivial interactions.
pub fn random_free_scheme(
    hs: &ComplexMatrix,
    ha: &ComplexMatrix,
    beta: f64,
    pointer: &Observable,
    seed: u64,
    mixture_size: usize,
) -> Result<MeasurementScheme> {
    if mixture_size == 0 {
        return Err(Error::Domain("mixture_size must be at least 1".into()));
    }
    let ha_h = hermitian_part(ha, "probe Hamiltonian")?;
    if pointer.dim() != ha_h.nrows() {
        return Err(Error::Dimension("pointer and probe Hamiltonian dimensions differ".into()));
    }
    let mut worst: f64 = 0.0;
    for z in pointer.effects() {
        worst = worst.max(commutator_defect(z, &ha_h)?);
    }
    if worst > VALIDATION_TOL {
        return Err(Error::precondition("[Z_x, H_A] = 0", worst, VALIDATION_TOL));
    }
    let hs_h = hermitian_part(hs, "system Hamiltonian")?;
    let total = additive_hamiltonian(&hs_h, &ha_h);
    let sd = eig_hermitian(&total, DEFAULT_CLUSTER_TOL)?;
    let d = total.nrows();

    let mut r = rng(seed);
    let unitaries: Vec<KrausChannel> = (0..mixture_size)
        .map(|_| {
            let mut u = linalg::zeros(d);
            for n in 0..sd.len() {
                let basis = sd.basis(n);
                let w = random_unitary(basis.ncols(), &mut r);
                u += basis * w * basis.adjoint();
            }
            KrausChannel::unitary(u)
        })
        .collect::<Result<_>>()?;
    let weights = random_simplex(mixture_size, &mut r);
    let interaction = KrausChannel::mixture(&weights, &unitaries)?;
    MeasurementScheme::new(hs_h, ha_h, beta, interaction, pointer.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{diag, pauli_x, projector, c};
    use crate::random::{random_state, random_unitary};

    fn resonant_qubits() -> (ComplexMatrix, ComplexMatrix) {
        (diag(&[0.0, 1.0]), diag(&[0.0, 1.0]))
    }

    #[test]
    fn swap_scheme_is_free() {
        let h = diag(&[0.0, 1.0]);
        let e = Observable::spectral(&h, DEFAULT_CLUSTER_TOL).unwrap();
        let scheme = trivial_scheme(&e, &h, 1.3).unwrap();
        let report = scheme.validate(1e-12, DEFAULT_MAX_MOMENT).unwrap();
        assert!(report.verdict);
        assert!(report.bistochastic_defect < 1e-12);
        assert!(report.energy_conservation_defects.iter().all(|&x| x < 1e-12));
        assert_eq!(report.energy_conservation_defects.len(), 4);
        assert!(report.yanase_defect < 1e-12);
    }

    #[test]
    fn x_basis_pointer_violates_yanase() {
        let (hs, ha) = resonant_qubits();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let plus = projector(&[c(s, 0.0), c(s, 0.0)]);
        let minus = projector(&[c(s, 0.0), c(-s, 0.0)]);
        let z = Observable::from_pairs(vec![("+", plus), ("-", minus)]).unwrap();
        let scheme = MeasurementScheme::new(hs, ha, 1.0, KrausChannel::swap(2), z).unwrap();
        let report = scheme.validate(1e-9, 4).unwrap();
        assert!(!report.verdict);
        // [|±⟩⟨±|, diag(0,1)] = ∓X/2·(iY-ish) with Frobenius norm √2/2
        assert!((report.yanase_defect - s).abs() < 1e-12);
    }

    #[test]
    fn damping_interaction_is_not_bistochastic() {
        let (hs, ha) = resonant_qubits();
        let damp = KrausChannel::amplitude_damping(0.4).unwrap().tensor(&KrausChannel::identity(2));
        let scheme = MeasurementScheme::new(hs, ha, 1.0, damp, Observable::computational(2)).unwrap();
        let report = scheme.validate(1e-9, 4).unwrap();
        assert!(!report.verdict);
        assert!(report.bistochastic_defect > 0.1);
    }

    #[test]
    fn rejects_inconsistent_dimensions() {
        let (hs, ha) = resonant_qubits();
        assert!(MeasurementScheme::new(hs.clone(), ha.clone(), 1.0, KrausChannel::identity(3), Observable::computational(2)).is_err());
        assert!(MeasurementScheme::new(hs.clone(), ha.clone(), 1.0, KrausChannel::swap(2), Observable::computational(3)).is_err());
        assert!(MeasurementScheme::new(hs, ha, -1.0, KrausChannel::swap(2), Observable::computational(2)).is_err());
    }

    #[test]
    fn trivial_scheme_thermalises() {
        let h = diag(&[0.0, 0.7, 1.5]);
        let mut r = rng(41);
        let e = crate::random::random_diagonal_povm(3, 2, &mut r);
        let scheme = trivial_scheme(&e, &h, 0.9).unwrap();
        let ins = scheme.induced_instrument().unwrap();
        let tau = scheme.system_gibbs_state();
        for _ in 0..5 {
            let rho = random_state(3, &mut r);
            let p = e.probabilities(&rho).unwrap();
            for (x, out) in ins.outputs(&rho).unwrap().iter().enumerate() {
                assert!(frobenius(&(out - tau.matrix().scale(p[x]))) < 1e-12);
            }
        }
    }

    #[test]
    fn trivial_scheme_rejects_noncommuting() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let plus = projector(&[c(s, 0.0), c(s, 0.0)]);
        let minus = projector(&[c(s, 0.0), c(-s, 0.0)]);
        let e = Observable::from_pairs(vec![("+", plus), ("-", minus)]).unwrap();
        match trivial_scheme(&e, &diag(&[0.0, 1.0]), 1.0) {
            Err(Error::Precondition { defect, .. }) => assert!((defect - s).abs() < 1e-12),
            other => panic!("unexpected {other:?}"),
        }
        let trivial = Observable::trivial(2, 2);
        let scheme = trivial_scheme(&trivial, &pauli_x(), 2.0).unwrap();
        assert!(scheme.validate(1e-12, 4).unwrap().verdict);
    }

    #[test]
    fn identity_interaction_reads_probe_only() {
        let (hs, ha) = resonant_qubits();
        let z = Observable::computational(2);
        let scheme = MeasurementScheme::new(hs, ha, 0.8, KrausChannel::identity(4), z.clone()).unwrap();
        let ins = scheme.induced_instrument().unwrap();
        let lambda = scheme.conjugate_channel().unwrap();
        let xi = scheme.probe_state();
        let q = z.probabilities(&xi).unwrap();
        let mut r = rng(42);
        for _ in 0..5 {
            let rho = random_state(2, &mut r);
            for (x, out) in ins.outputs(&rho).unwrap().iter().enumerate() {
                assert!(frobenius(&(out - rho.matrix().scale(q[x]))) < 1e-13);
            }
            let probe = lambda.apply(&rho).unwrap();
            assert!(frobenius(&(probe.matrix() - xi.matrix())) < 1e-13);
        }
    }

    #[test]
    fn induced_instrument_matches_dilation() {
        // oracle: build ρ ⊗ ξ, apply ℰ, multiply by 1 ⊗ Z_x, trace out the probe
        let hs = diag(&[0.0, 1.0, 2.0]);
        let ha = diag(&[0.0, 1.0]);
        let mut r = rng(43);
        let z = crate::random::random_diagonal_povm(2, 3, &mut r);
        let scheme = random_free_scheme(&hs, &ha, 0.6, &z, 5, 3).unwrap();
        let ins = scheme.induced_instrument().unwrap();
        let xi = scheme.probe_state();
        for _ in 0..5 {
            let rho = random_state(3, &mut r);
            let joint = scheme.interaction().apply_matrix(rho.tensor(&xi).matrix()).unwrap();
            for (x, zx) in z.effects().iter().enumerate() {
                let weighted = kron(&linalg::identity(3), zx) * &joint;
                let oracle = linalg::partial_trace(&weighted, (3, 2), linalg::Subsystem::System).unwrap();
                let out = ins.apply_outcome(x, rho.matrix()).unwrap();
                assert!(frobenius(&(out - oracle)) < 1e-12);
            }
            let lambda = scheme.conjugate_channel().unwrap().apply(&rho).unwrap();
            let oracle = linalg::partial_trace(&joint, (3, 2), linalg::Subsystem::Probe).unwrap();
            assert!(frobenius(&(lambda.matrix() - oracle)) < 1e-12);
        }
    }

    #[test]
    fn swap_conjugate_channel_delivers_input() {
        let h = diag(&[0.0, 1.0]);
        let scheme = trivial_scheme(&Observable::computational(2), &h, 1.0).unwrap();
        let lambda = scheme.conjugate_channel().unwrap();
        let mut r = rng(44);
        let rho = random_state(2, &mut r);
        assert!(frobenius(&(lambda.apply(&rho).unwrap().matrix() - rho.matrix())) < 1e-13);
    }

    #[test]
    fn random_scheme_resonant_qubits() {
        let (hs, ha) = resonant_qubits();
        let z = Observable::computational(2);
        let scheme = random_free_scheme(&hs, &ha, 1.0, &z, 7, 3).unwrap();
        let report = scheme.validate(1e-9, 4).unwrap();
        assert!(report.verdict, "{report:?}");
        let e = scheme.induced_instrument().unwrap().induced_observable().unwrap();
        assert!(e.triviality_defect() > 1e-3);
        assert!(scheme.fixed_point_defect() < 1e-12);
        let again = random_free_scheme(&hs, &ha, 1.0, &z, 7, 3).unwrap();
        assert_eq!(scheme, again);
        assert_ne!(scheme, random_free_scheme(&hs, &ha, 1.0, &z, 8, 3).unwrap());
    }

    #[test]
    fn nondegenerate_single_unitary_is_phase_only() {
        let hs = diag(&[0.0, 1.0]);
        let ha = diag(&[0.0, 2.5]);
        let z = Observable::computational(2);
        let scheme = random_free_scheme(&hs, &ha, 1.0, &z, 3, 1).unwrap();
        let u = &scheme.interaction().kraus()[0];
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    assert!(u[(i, j)].norm() < 1e-12);
                }
            }
        }
        // populations are untouched; the outcome only reflects the probe
        let ins = scheme.induced_instrument().unwrap();
        let q = z.probabilities(&scheme.probe_state()).unwrap();
        let mut r = rng(45);
        let rho = random_state(2, &mut r);
        for (x, out) in ins.outputs(&rho).unwrap().iter().enumerate() {
            for k in 0..2 {
                assert!((out[(k, k)] - rho.matrix()[(k, k)] * q[x]).norm() < 1e-12);
            }
            assert!((out[(0, 1)].norm() - rho.matrix()[(0, 1)].norm() * q[x]).abs() < 1e-12);
        }
    }

    #[test]
    fn random_scheme_rejects_yanase_violation() {
        let (hs, ha) = resonant_qubits();
        let mut r = rng(46);
        let u = random_unitary(2, &mut r);
        let z = Observable::new(
            vec!["a", "b"],
            vec![&u * diag(&[1.0, 0.0]) * u.adjoint(), &u * diag(&[0.0, 1.0]) * u.adjoint()],
        )
        .unwrap();
        assert!(matches!(random_free_scheme(&hs, &ha, 1.0, &z, 1, 2), Err(Error::Precondition { .. })));
    }

    #[test]
    fn moment_defects() {
        let h = diag(&[0.0, 1.0, 2.5]);
        let total = additive_hamiltonian(&h, &h);
        for k in 1..=4 {
            assert!(energy_moment_defect(&KrausChannel::swap(3), &total, k).unwrap() < 1e-12);
        }
        let mut r = rng(47);
        let haar = KrausChannel::unitary(random_unitary(9, &mut r)).unwrap();
        assert!(energy_moment_defect(&haar, &total, 1).unwrap() > 1e-3);
    }

    #[test]
    fn json_roundtrip() {
        let (hs, ha) = resonant_qubits();
        let scheme = random_free_scheme(&hs, &ha, 1.0, &Observable::computational(2), 7, 2).unwrap();
        let text = serde_json::to_string(&scheme).unwrap();
        let back: MeasurementScheme = serde_json::from_str(&text).unwrap();
        assert_eq!(back.beta(), scheme.beta());
        assert!(frobenius(&(back.interaction().kraus()[1].clone() - scheme.interaction().kraus()[1].clone())) < 1e-15);
    }
}
