//! Structural classifiers for observables and instruments, and the
//! constructions available for observables that commute with the Hamiltonian.
//!
//! No classifier here certifies that an instrument is thermal. Covariance,
//! Gibbs preservation and the thermalising conclusion for nuclear
//! instruments are necessary conditions only; positive certificates come
//! from explicit schemes.
//!
//! Only the commuting joint observable is constructed. Two observables that
//! do not commute with each other can still be jointly measurable, but a
//! joint measurement may then need non-thermal resources.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{self, commutator_defect, eig_hermitian, eigh, frobenius, kron, ComplexMatrix, DEFAULT_CLUSTER_TOL};
use crate::objects::{gibbs_state, Instrument, Observable, State};
use crate::random::{random_state, rng};

/// Eigenvalues below this are dropped when refining to rank one.
pub const REFINE_TOL: f64 = 1e-10;

/// Times at which covariance is spot-checked on a sample state.
pub const SAMPLE_TIMES: [f64; 3] = [0.37, 1.0, 2.5];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifierVerdict {
    pub name: String,
    pub verdict: bool,
    pub defect: f64,
    pub tol: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl ClassifierVerdict {
    fn new(name: &str, defect: f64, tol: f64, witness: Option<Value>) -> Self {
        ClassifierVerdict {
            name: name.to_string(),
            verdict: defect <= tol,
            defect,
            tol,
            witness,
        }
    }
}

fn check_dim(d: usize, h: &ComplexMatrix) -> Result<()> {
    if h.shape() != (d, d) {
        return Err(Error::Dimension(format!(
            "{d}-dimensional object with a {}x{} Hamiltonian",
            h.nrows(),
            h.ncols()
        )));
    }
    Ok(())
}

/// Index and value of the largest entry, `(0, 0.0)` when empty.
fn worst(defects: &[f64]) -> (usize, f64) {
    defects
        .iter()
        .copied()
        .enumerate()
        .fold((0, 0.0), |best, (i, v)| if v > best.1 { (i, v) } else { best })
}

/// Thermal iff every effect commutes with `h`.
pub fn is_thermal_observable(e: &Observable, h: &ComplexMatrix, tol: f64) -> Result<ClassifierVerdict> {
    check_dim(e.dim(), h)?;
    let defects = e
        .effects()
        .iter()
        .map(|ex| commutator_defect(ex, h))
        .collect::<Result<Vec<_>>>()?;
    let (x, defect) = worst(&defects);
    let witness = (defect > tol).then(|| json!({ "outcome": e.outcomes()[x], "commutator_defects": defects }));
    Ok(ClassifierVerdict::new("thermal_observable", defect, tol, witness))
}

/// Covariance under `e^{-itH}`: each outcome's superoperator must commute
/// with the generator `ρ ↦ −i[H, ρ]`.
pub fn is_covariant_instrument(ins: &Instrument, h: &ComplexMatrix, tol: f64) -> Result<ClassifierVerdict> {
    check_dim(ins.dim(), h)?;
    let generator = linalg::commutator_superoperator(h);
    let defects: Vec<f64> = ins
        .operations()
        .iter()
        .map(|op| {
            let s = op.superoperator();
            frobenius(&(&s * &generator - &generator * &s))
        })
        .collect();
    let (x, defect) = worst(&defects);

    let sample = random_state(ins.dim(), &mut rng(0x5eed));
    let mut sampled = Vec::with_capacity(SAMPLE_TIMES.len());
    for &t in &SAMPLE_TIMES {
        let u = linalg::time_evolution(h, t);
        let rotated = &u * sample.matrix() * u.adjoint();
        let mut worst_t: f64 = 0.0;
        for op in ins.operations() {
            let lhs = op.apply(&rotated)?;
            let rhs = &u * op.apply(sample.matrix())? * u.adjoint();
            worst_t = worst_t.max(frobenius(&(lhs - rhs)));
        }
        sampled.push(json!({ "t": t, "defect": worst_t }));
    }
    let witness = json!({
        "worst_outcome": ins.outcomes().get(x),
        "sampled_times": sampled,
    });
    Ok(ClassifierVerdict::new("covariant", defect, tol, Some(witness)))
}

/// `ℐ_x(τ_β) = tr[E_x τ_β] τ_β` for every outcome.
pub fn is_gibbs_preserving(ins: &Instrument, h: &ComplexMatrix, beta: f64, tol: f64) -> Result<ClassifierVerdict> {
    check_dim(ins.dim(), h)?;
    let tau = gibbs_state(h, beta)?;
    let defects: Vec<f64> = ins
        .outputs(&tau)?
        .iter()
        .map(|out| {
            let q = out.trace().re;
            frobenius(&(out - tau.matrix().scale(q)))
        })
        .collect();
    let (x, defect) = worst(&defects);
    let witness = (defect > tol).then(|| json!({ "outcome": ins.outcomes()[x], "residual": defect }));
    Ok(ClassifierVerdict::new("gibbs_preserving", defect, tol, witness))
}

/// Result of the nuclearity test with the recovered output states.
#[derive(Debug, Clone)]
pub struct Nuclearity {
    pub verdict: ClassifierVerdict,
    /// `σ_x` per outcome when the verdict holds; `None` for zero effects.
    pub states: Option<Vec<Option<State>>>,
}

/// Nuclear iff each `ℐ_x(ρ) = tr[E_x ρ] σ_x`, tested through the Choi
/// factorization `C_x = σ_x ⊗ E_xᵀ`.
pub fn is_nuclear(ins: &Instrument, tol: f64) -> Result<Nuclearity> {
    let mut defects = Vec::with_capacity(ins.len());
    let mut states = Vec::with_capacity(ins.len());
    for op in ins.operations() {
        let e = op.effect();
        let weight = e.trace().re;
        if weight <= tol {
            defects.push(0.0);
            states.push(None);
            continue;
        }
        let choi = op.choi();
        let sigma = choi.output_marginal().unscale(weight);
        let residual = frobenius(&(choi.matrix() - kron(&sigma, &e.transpose())));
        defects.push(residual);
        states.push(Some(State::trusted(sigma)));
    }
    let (x, defect) = worst(&defects);
    let witness = (defect > tol).then(|| json!({ "outcome": ins.outcomes()[x], "factorization_residual": defect }));
    let verdict = ClassifierVerdict::new("nuclear", defect, tol, witness);
    let states = verdict.verdict.then_some(states);
    Ok(Nuclearity { verdict, states })
}

/// For a nuclear, Gibbs-preserving instrument, every prepared state must be
/// the Gibbs state. Anything else is refused with a precondition error.
pub fn check_prop2(ins: &Instrument, h: &ComplexMatrix, beta: f64, tol: f64) -> Result<ClassifierVerdict> {
    let nuclear = is_nuclear(ins, tol)?;
    if !nuclear.verdict.verdict {
        return Err(Error::precondition("nuclear instrument", nuclear.verdict.defect, tol));
    }
    let gibbs = is_gibbs_preserving(ins, h, beta, tol)?;
    if !gibbs.verdict {
        return Err(Error::precondition("Gibbs-preserving instrument", gibbs.defect, tol));
    }
    let tau = gibbs_state(h, beta)?;
    let states = nuclear.states.unwrap_or_default();
    let defects: Vec<f64> = states
        .iter()
        .map(|s| s.as_ref().map_or(0.0, |s| frobenius(&(s.matrix() - tau.matrix()))))
        .collect();
    let (x, defect) = worst(&defects);
    let witness = (defect > tol).then(|| json!({ "outcome": ins.outcomes()[x], "distance_to_gibbs": defect }));
    Ok(ClassifierVerdict::new("prop2", defect, tol, witness))
}

/// Quasi-complete iff every outcome has Choi rank at most one. The defect is
/// the largest second Choi eigenvalue.
pub fn is_quasi_complete(ins: &Instrument, tol: f64) -> Result<ClassifierVerdict> {
    let mut defects = Vec::with_capacity(ins.len());
    let mut ranks = Vec::with_capacity(ins.len());
    for op in ins.operations() {
        let choi = op.choi();
        let spectrum = choi.spectrum();
        let second = if spectrum.len() >= 2 { spectrum[spectrum.len() - 2].max(0.0) } else { 0.0 };
        defects.push(second);
        ranks.push(choi.rank(tol));
    }
    let (x, defect) = worst(&defects);
    let witness = (defect > tol).then(|| json!({ "outcome": ins.outcomes()[x], "choi_rank": ranks[x] }));
    Ok(ClassifierVerdict::new("quasi_complete", defect, tol, witness))
}

/// Joint observable of `E` and the energy, with its marginal residuals.
#[derive(Debug, Clone)]
pub struct JointObservable {
    /// Effects `G_{x,m} = E_x P_m`, labelled `"{x},{m}"` in row-major order.
    pub observable: Observable,
    pub energies: Vec<f64>,
    pub observable_marginal_defect: f64,
    pub energy_marginal_defect: f64,
}

pub fn joint_with_hamiltonian(e: &Observable, h: &ComplexMatrix, tol: f64) -> Result<JointObservable> {
    let thermal = is_thermal_observable(e, h, tol)?;
    if !thermal.verdict {
        return Err(Error::precondition("[E_x, H_S] = 0", thermal.defect, tol));
    }
    let spectral = eig_hermitian(h, DEFAULT_CLUSTER_TOL)?;
    let mut labels = Vec::new();
    let mut effects = Vec::new();
    for (x, ex) in e.effects().iter().enumerate() {
        for (m, pm) in spectral.projectors.iter().enumerate() {
            labels.push(format!("{},{}", e.outcomes()[x], m));
            effects.push(linalg::symmetrize(&(ex * pm)));
        }
    }
    let observable = Observable::with_tol(labels, effects, tol.max(crate::objects::VALIDATION_TOL))?;
    let levels = spectral.len();
    let g = observable.effects();
    let mut observable_marginal_defect: f64 = 0.0;
    for (x, ex) in e.effects().iter().enumerate() {
        let sum = (0..levels).fold(linalg::zeros(e.dim()), |acc, m| acc + &g[x * levels + m]);
        observable_marginal_defect = observable_marginal_defect.max(frobenius(&(sum - ex)));
    }
    let mut energy_marginal_defect: f64 = 0.0;
    for (m, pm) in spectral.projectors.iter().enumerate() {
        let sum = (0..e.len()).fold(linalg::zeros(e.dim()), |acc, x| acc + &g[x * levels + m]);
        energy_marginal_defect = energy_marginal_defect.max(frobenius(&(sum - pm)));
    }
    Ok(JointObservable {
        observable,
        energies: spectral.eigenvalues.clone(),
        observable_marginal_defect,
        energy_marginal_defect,
    })
}

/// `E_x = Σ_m p(x|m) P_m` for a nondegenerate Hamiltonian.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PostProcessing {
    pub outcomes: Vec<String>,
    pub energies: Vec<f64>,
    /// `matrix[x][m] = p(x|m)`.
    pub matrix: Vec<Vec<f64>>,
    pub reconstruction_defect: f64,
}

impl PostProcessing {
    /// `max_m |Σ_x p(x|m) − 1|`.
    pub fn column_sum_defect(&self) -> f64 {
        (0..self.energies.len())
            .map(|m| (self.matrix.iter().map(|row| row[m]).sum::<f64>() - 1.0).abs())
            .fold(0.0, f64::max)
    }
}

pub fn post_processing_decomposition(e: &Observable, h: &ComplexMatrix, tol: f64) -> Result<PostProcessing> {
    let thermal = is_thermal_observable(e, h, tol)?;
    if !thermal.verdict {
        return Err(Error::precondition("[E_x, H_S] = 0", thermal.defect, tol));
    }
    let spectral = eig_hermitian(h, DEFAULT_CLUSTER_TOL)?;
    if !spectral.is_nondegenerate() {
        let largest = spectral.multiplicities.iter().copied().max().unwrap_or(1);
        return Err(Error::precondition("nondegenerate Hamiltonian", largest as f64, 1.0));
    }
    let matrix: Vec<Vec<f64>> = e
        .effects()
        .iter()
        .map(|ex| spectral.projectors.iter().map(|pm| linalg::trace_product(ex, pm).re).collect())
        .collect();
    let mut reconstruction_defect: f64 = 0.0;
    for (ex, row) in e.effects().iter().zip(&matrix) {
        let rebuilt = spectral
            .projectors
            .iter()
            .zip(row)
            .fold(linalg::zeros(e.dim()), |acc, (pm, &p)| acc + pm.scale(p));
        reconstruction_defect = reconstruction_defect.max(frobenius(&(rebuilt - ex)));
    }
    Ok(PostProcessing {
        outcomes: e.outcomes().to_vec(),
        energies: spectral.eigenvalues.clone(),
        matrix,
        reconstruction_defect,
    })
}

/// Rank-one refinement of an observable.
#[derive(Debug, Clone)]
pub struct Refinement {
    /// Effects `λ_i^{(y)} |v_i^{(y)}⟩⟨v_i^{(y)}|`, labelled `"{y}.{i}"`.
    pub observable: Observable,
    /// `relabel[k]` is the original outcome index of refined outcome `k`.
    pub relabel: Vec<usize>,
    pub coarse_graining_defect: f64,
}

pub fn refine_to_rank_one(f: &Observable, tol: f64) -> Result<Refinement> {
    let d = f.dim();
    let mut labels = Vec::new();
    let mut effects = Vec::new();
    let mut relabel = Vec::new();
    for (y, fy) in f.effects().iter().enumerate() {
        let (values, vectors) = eigh(fy);
        let mut i = 0;
        for (j, &lambda) in values.iter().enumerate() {
            if lambda < tol {
                continue;
            }
            let v = vectors.column(j).clone_owned();
            effects.push((&v * v.adjoint()).scale(lambda));
            labels.push(format!("{}.{}", f.outcomes()[y], i));
            relabel.push(y);
            i += 1;
        }
    }
    let dropped = (d * f.len()) as f64 * tol;
    let observable = Observable::with_tol(labels, effects, crate::objects::VALIDATION_TOL.max(dropped))?;
    let coarse = observable.coarse_grain(&relabel, f.outcomes().to_vec());
    let coarse_graining_defect = match coarse {
        Ok(g) => g.distance(f),
        Err(_) => f64::INFINITY,
    };
    Ok(Refinement {
        observable,
        relabel,
        coarse_graining_defect,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{basis_projector, c, diag, identity, projector};
    use crate::scheme::{random_free_scheme, trivial_scheme};

    fn x_basis() -> Observable {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        Observable::new(
            vec!["+", "-"],
            vec![projector(&[c(s, 0.0), c(s, 0.0)]), projector(&[c(s, 0.0), c(-s, 0.0)])],
        )
        .unwrap()
    }

    fn rank_two_pair() -> Observable {
        let p = diag(&[1.0, 1.0, 0.0, 0.0]);
        Observable::new(vec!["a", "b"], vec![p.clone(), identity(4) - p]).unwrap()
    }

    #[test]
    fn thermal_observable_examples() {
        let h = diag(&[0.0, 1.0]);
        assert!(is_thermal_observable(&Observable::spectral(&h, 1e-8).unwrap(), &h, 1e-10).unwrap().verdict);
        let v = is_thermal_observable(&x_basis(), &h, 1e-10).unwrap();
        assert!(!v.verdict);
        // each effect contributes ‖[E, H]‖_F = 1/√2, √2 over the pair
        let defects: Vec<f64> = serde_json::from_value(v.witness.unwrap()["commutator_defects"].clone()).unwrap();
        for d in &defects {
            assert!((d - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        }
        assert!((defects.iter().sum::<f64>() - 2f64.sqrt()).abs() < 1e-12);
        assert!(is_thermal_observable(&Observable::trivial(2, 2), &diag(&[0.3, -1.0]), 1e-12).unwrap().verdict);
        assert!(is_thermal_observable(&Observable::trivial(2, 2), &diag(&[0.3, 1.0, 2.0]), 1e-12).is_err());
    }

    #[test]
    fn covariance_examples() {
        let h = diag(&[0.0, 1.0]);
        let luders = Instrument::luders(&Observable::computational(2)).unwrap();
        let v = is_covariant_instrument(&luders, &h, 1e-10).unwrap();
        assert!(v.verdict);
        let free = random_free_scheme(&h, &h, 1.0, &Observable::computational(2), 4, 3).unwrap();
        assert!(is_covariant_instrument(&free.induced_instrument().unwrap(), &h, 1e-9).unwrap().verdict);
        let xl = Instrument::luders(&x_basis()).unwrap();
        let v = is_covariant_instrument(&xl, &h, 1e-10).unwrap();
        assert!(!v.verdict);
        let sampled = &v.witness.unwrap()["sampled_times"];
        assert_eq!(sampled.as_array().unwrap().len(), 3);
    }

    #[test]
    fn gibbs_preservation_examples() {
        let h = diag(&[0.0, 1.0]);
        let trivial = trivial_scheme(&Observable::computational(2), &h, 1.0).unwrap();
        assert!(is_gibbs_preserving(&trivial.induced_instrument().unwrap(), &h, 1.0, 1e-10).unwrap().verdict);
        let luders = Instrument::luders(&Observable::computational(2)).unwrap();
        // ℐ_0(τ) = τ_00|0⟩⟨0| against τ_00 τ: residual τ_00 τ_11 √2
        let v = is_gibbs_preserving(&luders, &h, 1.0, 1e-10).unwrap();
        assert!(!v.verdict);
        let tau = gibbs_state(&h, 1.0).unwrap();
        let (t0, t1) = (tau.matrix()[(0, 0)].re, tau.matrix()[(1, 1)].re);
        assert!((v.defect - t0 * t1 * 2f64.sqrt()).abs() < 1e-12);
        let free = random_free_scheme(&h, &h, 0.7, &Observable::computational(2), 11, 2).unwrap();
        assert!(is_gibbs_preserving(&free.induced_instrument().unwrap(), &h, 0.7, 1e-9).unwrap().verdict);
    }

    #[test]
    fn nuclear_examples() {
        let h = diag(&[0.0, 1.0]);
        let beta = 1.3;
        let trivial = trivial_scheme(&Observable::computational(2), &h, beta).unwrap();
        let n = is_nuclear(&trivial.induced_instrument().unwrap(), 1e-10).unwrap();
        assert!(n.verdict.verdict);
        let tau = gibbs_state(&h, beta).unwrap();
        for s in n.states.unwrap().into_iter().flatten() {
            assert!(frobenius(&(s.matrix() - tau.matrix())) < 1e-10);
        }

        let luders = Instrument::luders(&Observable::computational(3)).unwrap();
        let n = is_nuclear(&luders, 1e-10).unwrap();
        assert!(n.verdict.verdict);
        for (k, s) in n.states.unwrap().into_iter().enumerate() {
            assert!(frobenius(&(s.unwrap().matrix() - basis_projector(3, k))) < 1e-12);
        }

        let n = is_nuclear(&Instrument::luders(&rank_two_pair()).unwrap(), 1e-10).unwrap();
        assert!(!n.verdict.verdict);
        assert!(n.states.is_none());
    }

    #[test]
    fn prop2_examples() {
        let h = diag(&[0.0, 0.5, 1.5]);
        let trivial = trivial_scheme(&Observable::computational(3), &h, 1.0).unwrap();
        assert!(check_prop2(&trivial.induced_instrument().unwrap(), &h, 1.0, 1e-9).unwrap().verdict);
        let luders = Instrument::luders(&Observable::computational(3)).unwrap();
        assert!(matches!(check_prop2(&luders, &h, 1.0, 1e-9), Err(Error::Precondition { .. })));
    }

    #[test]
    fn quasi_completeness_examples() {
        let mut r = rng(61);
        let e = crate::random::random_povm(3, 4, &mut r);
        assert!(is_quasi_complete(&Instrument::luders(&e).unwrap(), 1e-10).unwrap().verdict);
        let h = diag(&[0.0, 1.0]);
        let trivial = trivial_scheme(&Observable::computational(2), &h, 1.0).unwrap();
        let v = is_quasi_complete(&trivial.induced_instrument().unwrap(), 1e-10).unwrap();
        assert!(!v.verdict);
        assert!(v.witness.unwrap()["choi_rank"].as_u64().unwrap() >= 2);
        let u = crate::random::random_unitary(3, &mut r);
        let unitary = Instrument::from_channel("u", &crate::objects::KrausChannel::unitary(u).unwrap()).unwrap();
        assert!(is_quasi_complete(&unitary, 1e-10).unwrap().verdict);
    }

    #[test]
    fn joint_observable_examples() {
        let h = diag(&[0.0, 1.0]);
        let p = Observable::spectral(&h, 1e-8).unwrap();
        let j = joint_with_hamiltonian(&p, &h, 1e-10).unwrap();
        for x in 0..2 {
            for m in 0..2 {
                let expected = if x == m { basis_projector(2, m) } else { linalg::zeros(2) };
                assert!(frobenius(&(j.observable.effect(x * 2 + m) - expected)) < 1e-12);
            }
        }
        let j = joint_with_hamiltonian(&Observable::trivial(2, 2), &h, 1e-10).unwrap();
        for x in 0..2 {
            for m in 0..2 {
                assert!(frobenius(&(j.observable.effect(x * 2 + m) - basis_projector(2, m).scale(0.5))) < 1e-12);
            }
        }
        let unsharp = Observable::new(vec!["y", "n"], vec![diag(&[0.8, 0.3]), diag(&[0.2, 0.7])]).unwrap();
        let j = joint_with_hamiltonian(&unsharp, &h, 1e-10).unwrap();
        let expected = [diag(&[0.8, 0.0]), diag(&[0.0, 0.3]), diag(&[0.2, 0.0]), diag(&[0.0, 0.7])];
        for (k, m) in expected.iter().enumerate() {
            assert!(frobenius(&(j.observable.effect(k) - m)) < 1e-12);
        }
        assert!(j.observable_marginal_defect < 1e-12 && j.energy_marginal_defect < 1e-12);
        assert!(matches!(joint_with_hamiltonian(&x_basis(), &h, 1e-10), Err(Error::Precondition { .. })));
    }

    #[test]
    fn post_processing_examples() {
        let h = diag(&[0.0, 1.0, 2.0]);
        let pp = post_processing_decomposition(&Observable::spectral(&h, 1e-8).unwrap(), &h, 1e-10).unwrap();
        for (x, row) in pp.matrix.iter().enumerate() {
            for (m, &v) in row.iter().enumerate() {
                assert!((v - if x == m { 1.0 } else { 0.0 }).abs() < 1e-12);
            }
        }
        let pp = post_processing_decomposition(&Observable::trivial(3, 2), &h, 1e-10).unwrap();
        assert!(pp.matrix.iter().flatten().all(|&v| (v - 0.5).abs() < 1e-12));
        let mut r = rng(62);
        let e = crate::random::random_diagonal_povm(3, 4, &mut r);
        let pp = post_processing_decomposition(&e, &h, 1e-10).unwrap();
        for (x, row) in pp.matrix.iter().enumerate() {
            for (m, &v) in row.iter().enumerate() {
                assert!((v - e.effect(x)[(m, m)].re).abs() < 1e-12);
            }
        }
        assert!(pp.reconstruction_defect < 1e-10);
        assert!(pp.column_sum_defect() < 1e-9);
        assert!(post_processing_decomposition(&Observable::trivial(2, 2), &diag(&[1.0, 1.0]), 1e-10).is_err());
        assert!(post_processing_decomposition(&x_basis(), &diag(&[0.0, 1.0]), 1e-10).is_err());
    }

    #[test]
    fn refinement_examples() {
        let sharp = Observable::computational(3);
        let r = refine_to_rank_one(&sharp, REFINE_TOL).unwrap();
        assert_eq!(r.relabel, vec![0, 1, 2]);
        assert!(r.observable.distance(&sharp) < 1e-12);

        let single = Observable::trivial(2, 1);
        let r = refine_to_rank_one(&single, REFINE_TOL).unwrap();
        assert_eq!(r.observable.len(), 2);
        let total = r.observable.effects().iter().fold(linalg::zeros(2), |a, e| a + e);
        assert!(frobenius(&(total - identity(2))) < 1e-12);

        let r = refine_to_rank_one(&rank_two_pair(), REFINE_TOL).unwrap();
        assert_eq!(r.observable.len(), 4);
        assert!(r.coarse_graining_defect < 1e-10);
        assert!(r.observable.is_rank_one(1e-10));
    }
}
