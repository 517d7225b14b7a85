use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json;
use crate::linalg::{self, eigh, frobenius, psd_sqrt, ComplexMatrix};
use crate::objects::{KrausChannel, Observable, Operation, State, VALIDATION_TOL};

/// Outcome-labeled family of operations whose sum is a channel.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawInstrument", into = "RawInstrument")]
pub struct Instrument {
    outcomes: Vec<String>,
    operations: Vec<Operation>,
}

#[derive(Serialize, Deserialize)]
struct RawInstrument {
    outcomes: Vec<String>,
    kraus_sets: Vec<KrausSet>,
}

#[derive(Serialize, Deserialize)]
#[serde(transparent)]
struct KrausSet(#[serde(with = "json::matrices")] Vec<ComplexMatrix>);

impl TryFrom<RawInstrument> for Instrument {
    type Error = Error;

    fn try_from(raw: RawInstrument) -> Result<Self> {
        Instrument::new(raw.outcomes, raw.kraus_sets.into_iter().map(|k| k.0).collect())
    }
}

impl From<Instrument> for RawInstrument {
    fn from(ins: Instrument) -> Self {
        RawInstrument {
            outcomes: ins.outcomes,
            kraus_sets: ins.operations.into_iter().map(|op| KrausSet(op.kraus().to_vec())).collect(),
        }
    }
}

impl Instrument {
    /// Builds an instrument from one Kraus set per outcome.
    pub fn new<S: Into<String>>(outcomes: Vec<S>, kraus_sets: Vec<Vec<ComplexMatrix>>) -> Result<Self> {
        let ops = kraus_sets.into_iter().map(Operation::new).collect::<Result<Vec<_>>>()?;
        Self::from_operations(outcomes, ops, VALIDATION_TOL)
    }

    pub fn from_operations<S: Into<String>>(outcomes: Vec<S>, operations: Vec<Operation>, tol: f64) -> Result<Self> {
        let outcomes: Vec<String> = outcomes.into_iter().map(Into::into).collect();
        if operations.is_empty() || outcomes.len() != operations.len() {
            return Err(Error::Dimension(format!(
                "{} outcome labels for {} operations",
                outcomes.len(),
                operations.len()
            )));
        }
        let (di, dout) = (operations[0].dim_in(), operations[0].dim_out());
        if di != dout {
            return Err(Error::Dimension("instrument operations must act in one space".into()));
        }
        if operations.iter().any(|op| op.dim_in() != di || op.dim_out() != dout) {
            return Err(Error::Dimension("instrument operations have inconsistent dimensions".into()));
        }
        for (i, label) in outcomes.iter().enumerate() {
            if outcomes[..i].contains(label) {
                return Err(Error::validation(format!("outcome `{label}`"), "unique label", 1.0));
            }
        }
        let total = operations
            .iter()
            .fold(linalg::zeros(di), |acc, op| acc + op.effect());
        let defect = frobenius(&(total - linalg::identity(di)));
        if !(defect <= tol) {
            return Err(Error::validation("instrument", "total channel trace preservation", defect));
        }
        Ok(Instrument { outcomes, operations })
    }

    /// Lüders instrument `ρ ↦ √E_x ρ √E_x`.
    pub fn luders(e: &Observable) -> Result<Self> {
        let ops = e
            .effects()
            .iter()
            .map(|ex| Operation::new(vec![psd_sqrt(ex)]))
            .collect::<Result<Vec<_>>>()?;
        Self::from_operations(e.outcomes().to_vec(), ops, VALIDATION_TOL)
    }

    /// Measure-and-prepare (nuclear) instrument `ρ ↦ tr[E_x ρ] σ_x`.
    pub fn measure_and_prepare(e: &Observable, states: &[State]) -> Result<Self> {
        if states.len() != e.len() {
            return Err(Error::Dimension("one prepared state per outcome is required".into()));
        }
        let d = e.dim();
        let mut ops = Vec::with_capacity(e.len());
        for (ex, sigma) in e.effects().iter().zip(states) {
            if sigma.dim() != d {
                return Err(Error::Dimension("prepared state dimension differs from observable".into()));
            }
            let root = psd_sqrt(ex);
            let (weights, vectors) = eigh(sigma.matrix());
            let mut kraus = Vec::new();
            for (j, &w) in weights.iter().enumerate() {
                if w <= 0.0 {
                    continue;
                }
                let ket = vectors.column(j).scale(w.sqrt());
                for k in 0..d {
                    // √w_j |s_j⟩⟨k| √E_x
                    let bra = root.row(k);
                    kraus.push(&ket * bra);
                }
            }
            if kraus.is_empty() {
                kraus.push(linalg::zeros(d));
            }
            ops.push(Operation::new(kraus)?);
        }
        Self::from_operations(e.outcomes().to_vec(), ops, VALIDATION_TOL)
    }

    /// One-outcome instrument wrapping a channel.
    pub fn from_channel(label: impl Into<String>, ch: &KrausChannel) -> Result<Self> {
        Self::from_operations(vec![label.into()], vec![ch.operation().clone()], VALIDATION_TOL)
    }

    pub fn outcomes(&self) -> &[String] {
        &self.outcomes
    }

    pub fn operations(&self) -> &[Operation] {
        &self.operations
    }

    pub fn operation(&self, x: usize) -> &Operation {
        &self.operations[x]
    }

    pub fn len(&self) -> usize {
        self.operations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.operations.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.operations[0].dim_in()
    }

    /// The observable `E_x = Σ_i K_{x,i}† K_{x,i}` measured by the instrument.
    pub fn induced_observable(&self) -> Result<Observable> {
        Observable::new(
            self.outcomes.clone(),
            self.operations.iter().map(Operation::effect).collect(),
        )
    }

    /// Sub-normalized outputs `ℐ_x(ρ)` for every outcome.
    pub fn outputs(&self, rho: &State) -> Result<Vec<ComplexMatrix>> {
        self.operations.iter().map(|op| op.apply(rho.matrix())).collect()
    }

    pub fn apply_outcome(&self, x: usize, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.operations[x].apply(rho)
    }

    /// `tr[ℐ_x(ρ)]` for every outcome.
    pub fn probabilities(&self, rho: &State) -> Result<Vec<f64>> {
        Ok(self.outputs(rho)?.iter().map(|m| m.trace().re).collect())
    }

    /// The total channel `ℐ_𝒳 = Σ_x ℐ_x`.
    pub fn total_channel(&self) -> KrausChannel {
        let kraus = self.operations.iter().flat_map(|op| op.kraus().iter().cloned()).collect();
        KrausChannel::with_tol(kraus, f64::INFINITY).expect("validated at construction")
    }

    /// Replaces every operation by its minimal Kraus form.
    pub fn compressed(&self, tol: f64) -> Instrument {
        Instrument {
            outcomes: self.outcomes.clone(),
            operations: self.operations.iter().map(|op| op.compressed(tol)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{diag, identity};
    use crate::objects::gibbs_state;
    use crate::random::{random_diagonal_povm, random_state, random_unitary, rng};

    #[test]
    fn luders_induces_its_observable() {
        let mut r = rng(21);
        let e = random_diagonal_povm(3, 3, &mut r);
        let u = random_unitary(3, &mut r);
        let rotated = Observable::new(
            e.outcomes().to_vec(),
            e.effects().iter().map(|ex| &u * ex * u.adjoint()).collect(),
        )
        .unwrap();
        let ins = Instrument::luders(&rotated).unwrap();
        assert!(ins.induced_observable().unwrap().distance(&rotated) < 1e-10);
    }

    #[test]
    fn unitary_single_outcome() {
        let mut r = rng(22);
        let ch = KrausChannel::unitary(random_unitary(2, &mut r)).unwrap();
        let ins = Instrument::from_channel("only", &ch).unwrap();
        let e = ins.induced_observable().unwrap();
        assert_eq!(e.len(), 1);
        assert!(frobenius(&(e.effect(0) - identity(2))) < 1e-13);
    }

    #[test]
    fn projective_kraus_sets() {
        let ins = Instrument::new(vec!["0", "1"], vec![vec![diag(&[1.0, 0.0])], vec![diag(&[0.0, 1.0])]]).unwrap();
        assert!(ins.induced_observable().unwrap().distance(&Observable::computational(2)) < 1e-15);
    }

    #[test]
    fn rejects_non_trace_preserving_total() {
        let err = Instrument::new(vec!["0", "1"], vec![vec![diag(&[1.0, 0.0])], vec![diag(&[0.0, 0.5])]]).unwrap_err();
        match err {
            Error::Validation { magnitude, .. } => assert!((magnitude - 0.75).abs() < 1e-12),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn born_rule_and_normalization() {
        let mut r = rng(23);
        let e = random_diagonal_povm(3, 2, &mut r);
        let tau = gibbs_state(&diag(&[0.0, 0.5, 1.3]), 0.8).unwrap();
        let ins = Instrument::measure_and_prepare(&e, &[tau.clone(), tau]).unwrap();
        let induced = ins.induced_observable().unwrap();
        for _ in 0..10 {
            let rho = random_state(3, &mut r);
            let p = ins.probabilities(&rho).unwrap();
            let q = induced.probabilities(&rho).unwrap();
            assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-12);
            for (a, b) in p.iter().zip(&q) {
                assert!((a - b).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn json_roundtrip() {
        let ins = Instrument::luders(&Observable::computational(2)).unwrap();
        let text = serde_json::to_string(&ins).unwrap();
        let back: Instrument = serde_json::from_str(&text).unwrap();
        assert_eq!(back.outcomes(), ins.outcomes());
        assert!(frobenius(&(back.operation(1).kraus()[0].clone() - ins.operation(1).kraus()[0].clone())) < 1e-15);
    }
}
