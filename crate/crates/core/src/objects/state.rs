use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json::MatrixSpec;
use crate::linalg::{self, eigh, hermitian_part, ComplexMatrix, C64};
use crate::objects::VALIDATION_TOL;

/// A density operator: Hermitian, positive semidefinite, unit trace.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MatrixSpec", into = "MatrixSpec")]
pub struct State {
    matrix: ComplexMatrix,
}

impl State {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        Self::with_tol(matrix, VALIDATION_TOL)
    }

    pub fn with_tol(matrix: ComplexMatrix, tol: f64) -> Result<Self> {
        let matrix = hermitian_part(&matrix, "state")?;
        let (values, _) = eigh(&matrix);
        let min = values[0];
        if !(min >= -tol) {
            return Err(Error::validation("state", "positivity", -min));
        }
        let tr = matrix.trace().re;
        if !((tr - 1.0).abs() <= tol) {
            return Err(Error::validation("state", "unit trace", (tr - 1.0).abs()));
        }
        Ok(State { matrix })
    }

    /// Normalizes a positive operator with nonzero trace.
    pub fn normalized(matrix: ComplexMatrix) -> Result<Self> {
        let tr = matrix.trace().re;
        if !(tr > 0.0) {
            return Err(Error::validation("state", "positive trace", tr));
        }
        Self::new(matrix.unscale(tr))
    }

    pub fn pure(psi: &[C64]) -> Result<Self> {
        let norm = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if !(norm > 0.0) {
            return Err(Error::Domain("zero state vector".into()));
        }
        let unit: Vec<C64> = psi.iter().map(|z| z / norm).collect();
        Self::new(linalg::projector(&unit))
    }

    /// `|k⟩⟨k|` in dimension `d`.
    pub fn basis(d: usize, k: usize) -> Self {
        State {
            matrix: linalg::basis_projector(d, k),
        }
    }

    pub fn maximally_mixed(d: usize) -> Self {
        State {
            matrix: linalg::identity(d).unscale(d as f64),
        }
    }

    /// Wraps the output of a trusted trace-preserving computation; only the
    /// Hermitian part is kept.
    pub(crate) fn trusted(matrix: ComplexMatrix) -> Self {
        State {
            matrix: linalg::symmetrize(&matrix),
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// Eigenvalues in ascending order.
    pub fn spectrum(&self) -> Vec<f64> {
        eigh(&self.matrix).0
    }

    /// `tr[A ρ]` for Hermitian `A`.
    pub fn expectation(&self, a: &ComplexMatrix) -> f64 {
        linalg::trace_product(a, &self.matrix).re
    }

    pub fn tensor(&self, other: &State) -> State {
        State {
            matrix: linalg::kron(&self.matrix, &other.matrix),
        }
    }

    pub fn purity(&self) -> f64 {
        linalg::trace_product(&self.matrix, &self.matrix).re
    }
}

impl TryFrom<MatrixSpec> for State {
    type Error = Error;

    fn try_from(spec: MatrixSpec) -> Result<Self> {
        State::new(spec.to_matrix()?)
    }
}

impl From<State> for MatrixSpec {
    fn from(s: State) -> Self {
        MatrixSpec::from_matrix(&s.matrix)
    }
}
