use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json;
use crate::linalg::{self, c, frobenius, kron, ComplexMatrix};
use crate::objects::{ChoiMatrix, State, VALIDATION_TOL};

/// A completely positive map in Kraus form, `ρ ↦ Σ_i K_i ρ K_i†`.
///
/// Input and output dimensions may differ. No trace condition is imposed;
/// see [`KrausChannel`] for the trace-preserving case.
#[derive(Debug, Clone, PartialEq)]
pub struct Operation {
    kraus: Vec<ComplexMatrix>,
    dim_in: usize,
    dim_out: usize,
}

impl Operation {
    pub fn new(kraus: Vec<ComplexMatrix>) -> Result<Self> {
        let first = kraus
            .first()
            .ok_or_else(|| Error::Dimension("operation needs at least one Kraus operator".into()))?;
        let (dim_out, dim_in) = first.shape();
        if dim_in == 0 || dim_out == 0 {
            return Err(Error::Dimension("empty Kraus operator".into()));
        }
        if let Some(k) = kraus.iter().find(|k| k.shape() != (dim_out, dim_in)) {
            return Err(Error::Dimension(format!(
                "Kraus operators of shapes {dim_out}x{dim_in} and {}x{}",
                k.nrows(),
                k.ncols()
            )));
        }
        Ok(Operation { kraus, dim_in, dim_out })
    }

    /// The zero map, `dim_in → dim_out`.
    pub fn zero(dim_in: usize, dim_out: usize) -> Self {
        Operation {
            kraus: vec![ComplexMatrix::zeros(dim_out, dim_in)],
            dim_in,
            dim_out,
        }
    }

    pub fn kraus(&self) -> &[ComplexMatrix] {
        &self.kraus
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    fn check_input(&self, a: &ComplexMatrix) -> Result<()> {
        if a.shape() != (self.dim_in, self.dim_in) {
            return Err(Error::Dimension(format!(
                "operation input is {}x{}, expected {d}x{d}",
                a.nrows(),
                a.ncols(),
                d = self.dim_in
            )));
        }
        Ok(())
    }

    /// `Σ K ρ K†` on an arbitrary (not necessarily positive) operator.
    pub fn apply(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.check_input(rho)?;
        Ok(self.apply_unchecked(rho))
    }

    pub(crate) fn apply_unchecked(&self, rho: &ComplexMatrix) -> ComplexMatrix {
        self.kraus
            .iter()
            .fold(ComplexMatrix::zeros(self.dim_out, self.dim_out), |acc, k| acc + k * rho * k.adjoint())
    }

    /// Heisenberg picture `Σ K† A K`.
    pub fn apply_dual(&self, a: &ComplexMatrix) -> Result<ComplexMatrix> {
        if a.shape() != (self.dim_out, self.dim_out) {
            return Err(Error::Dimension(format!(
                "dual input is {}x{}, expected {d}x{d}",
                a.nrows(),
                a.ncols(),
                d = self.dim_out
            )));
        }
        Ok(self
            .kraus
            .iter()
            .fold(ComplexMatrix::zeros(self.dim_in, self.dim_in), |acc, k| acc + k.adjoint() * a * k))
    }

    /// `Σ K†K`, the effect `Φ*(1)`.
    pub fn effect(&self) -> ComplexMatrix {
        self.kraus
            .iter()
            .fold(ComplexMatrix::zeros(self.dim_in, self.dim_in), |acc, k| acc + k.adjoint() * k)
    }

    /// `Σ KK†`, the image `Φ(1)`.
    pub fn image_of_identity(&self) -> ComplexMatrix {
        self.kraus
            .iter()
            .fold(ComplexMatrix::zeros(self.dim_out, self.dim_out), |acc, k| acc + k * k.adjoint())
    }

    /// Matrix of the map in the row-major vectorization: `vec(Φ(ρ)) = S vec(ρ)`.
    pub fn superoperator(&self) -> ComplexMatrix {
        self.kraus.iter().fold(
            ComplexMatrix::zeros(self.dim_out * self.dim_out, self.dim_in * self.dim_in),
            |acc, k| acc + kron(k, &k.map(|z| z.conj())),
        )
    }

    pub fn choi(&self) -> ChoiMatrix {
        ChoiMatrix::of_operation(self)
    }

    /// Applies `self` then `next`.
    pub fn then(&self, next: &Operation) -> Result<Operation> {
        if next.dim_in != self.dim_out {
            return Err(Error::Dimension("composed operations do not chain".into()));
        }
        let kraus = next
            .kraus
            .iter()
            .flat_map(|b| self.kraus.iter().map(move |a| b * a))
            .collect();
        Operation::new(kraus)
    }

    pub fn tensor(&self, other: &Operation) -> Operation {
        let kraus = self
            .kraus
            .iter()
            .flat_map(|a| other.kraus.iter().map(move |b| kron(a, b)))
            .collect();
        Operation {
            kraus,
            dim_in: self.dim_in * other.dim_in,
            dim_out: self.dim_out * other.dim_out,
        }
    }

    pub(crate) fn scaled(&self, weight: f64) -> Operation {
        let s = weight.max(0.0).sqrt();
        Operation {
            kraus: self.kraus.iter().map(|k| k.scale(s)).collect(),
            dim_in: self.dim_in,
            dim_out: self.dim_out,
        }
    }

    /// Rebuilds the operation with the minimal number of Kraus operators,
    /// read off the Choi eigendecomposition.
    pub fn compressed(&self, tol: f64) -> Operation {
        self.choi().to_operation(tol)
    }
}

/// Trace-preserving report for [`KrausChannel::bistochastic_report`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BistochasticReport {
    /// `‖Σ K†K − 1‖_F`.
    pub trace_defect: f64,
    /// `‖Σ KK† − 1‖_F`.
    pub unital_defect: f64,
    pub bistochastic: bool,
}

/// A trace-preserving [`Operation`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawChannel", into = "RawChannel")]
pub struct KrausChannel {
    op: Operation,
}

#[derive(Serialize, Deserialize)]
struct RawChannel {
    #[serde(with = "json::matrices")]
    kraus: Vec<ComplexMatrix>,
}

impl TryFrom<RawChannel> for KrausChannel {
    type Error = Error;

    fn try_from(raw: RawChannel) -> Result<Self> {
        KrausChannel::new(raw.kraus)
    }
}

impl From<KrausChannel> for RawChannel {
    fn from(ch: KrausChannel) -> Self {
        RawChannel { kraus: ch.op.kraus }
    }
}

impl KrausChannel {
    pub fn new(kraus: Vec<ComplexMatrix>) -> Result<Self> {
        Self::with_tol(kraus, VALIDATION_TOL)
    }

    pub fn with_tol(kraus: Vec<ComplexMatrix>, tol: f64) -> Result<Self> {
        Self::from_operation(Operation::new(kraus)?, tol)
    }

    pub fn from_operation(op: Operation, tol: f64) -> Result<Self> {
        let defect = frobenius(&(op.effect() - linalg::identity(op.dim_in)));
        if !(defect <= tol) {
            return Err(Error::validation("channel", "trace preservation", defect));
        }
        Ok(KrausChannel { op })
    }

    pub fn identity(d: usize) -> Self {
        KrausChannel {
            op: Operation {
                kraus: vec![linalg::identity(d)],
                dim_in: d,
                dim_out: d,
            },
        }
    }

    pub fn unitary(u: ComplexMatrix) -> Result<Self> {
        let d = linalg::ensure_square(&u, "unitary")?;
        let defect = frobenius(&(u.adjoint() * &u - linalg::identity(d)));
        if !(defect <= VALIDATION_TOL) {
            return Err(Error::validation("unitary", "U†U = 1", defect));
        }
        Ok(KrausChannel {
            op: Operation {
                kraus: vec![u],
                dim_in: d,
                dim_out: d,
            },
        })
    }

    /// Swap of two `d`-dimensional factors, `A ⊗ B ↦ B ⊗ A`.
    pub fn swap(d: usize) -> Self {
        let mut u = ComplexMatrix::zeros(d * d, d * d);
        for i in 0..d {
            for j in 0..d {
                u[(j * d + i, i * d + j)] = c(1.0, 0.0);
            }
        }
        KrausChannel {
            op: Operation {
                kraus: vec![u],
                dim_in: d * d,
                dim_out: d * d,
            },
        }
    }

    /// Qubit amplitude damping with decay probability `gamma`.
    pub fn amplitude_damping(gamma: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&gamma) {
            return Err(Error::Domain(format!("damping probability {gamma} outside [0, 1]")));
        }
        let k0 = linalg::real_matrix(2, 2, &[1.0, 0.0, 0.0, (1.0 - gamma).sqrt()]);
        let k1 = linalg::real_matrix(2, 2, &[0.0, gamma.sqrt(), 0.0, 0.0]);
        KrausChannel::new(vec![k0, k1])
    }

    /// Convex combination `Σ w_i Φ_i`; weights must be a probability vector.
    pub fn mixture(weights: &[f64], channels: &[KrausChannel]) -> Result<Self> {
        if weights.len() != channels.len() || channels.is_empty() {
            return Err(Error::Dimension("mixture weights do not match channels".into()));
        }
        let total: f64 = weights.iter().sum();
        if weights.iter().any(|&w| w < 0.0) || (total - 1.0).abs() > VALIDATION_TOL {
            return Err(Error::Domain("mixture weights are not a probability vector".into()));
        }
        let kraus = weights
            .iter()
            .zip(channels)
            .flat_map(|(&w, ch)| ch.op.scaled(w).kraus)
            .collect();
        KrausChannel::new(kraus)
    }

    pub fn operation(&self) -> &Operation {
        &self.op
    }

    pub fn kraus(&self) -> &[ComplexMatrix] {
        &self.op.kraus
    }

    pub fn dim_in(&self) -> usize {
        self.op.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.op.dim_out
    }

    pub fn apply(&self, rho: &State) -> Result<State> {
        Ok(State::trusted(self.op.apply(rho.matrix())?))
    }

    pub fn apply_matrix(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.op.apply(rho)
    }

    pub fn apply_dual(&self, a: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.op.apply_dual(a)
    }

    pub fn bistochastic_report(&self, tol: f64) -> BistochasticReport {
        let trace_defect = frobenius(&(self.op.effect() - linalg::identity(self.op.dim_in)));
        let unital_defect = if self.op.dim_in == self.op.dim_out {
            frobenius(&(self.op.image_of_identity() - linalg::identity(self.op.dim_out)))
        } else {
            f64::INFINITY
        };
        BistochasticReport {
            trace_defect,
            unital_defect,
            bistochastic: trace_defect <= tol && unital_defect <= tol,
        }
    }

    pub fn is_bistochastic(&self, tol: f64) -> bool {
        self.bistochastic_report(tol).bistochastic
    }

    pub fn tensor(&self, other: &KrausChannel) -> KrausChannel {
        KrausChannel {
            op: self.op.tensor(&other.op),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{diag, hermitian_fn, pauli_x, pauli_z};
    use crate::random::{random_hermitian, random_state, random_unitary, rng};
    use approx::assert_abs_diff_eq;

    #[test]
    fn identity_channel_is_identity() {
        let mut r = rng(1);
        let rho = random_state(3, &mut r);
        let out = KrausChannel::identity(3).apply(&rho).unwrap();
        assert!(frobenius(&(out.matrix() - rho.matrix())) < 1e-15);
    }

    #[test]
    fn swap_exchanges_factors() {
        let mut r = rng(2);
        let rho = random_state(3, &mut r);
        let xi = random_state(3, &mut r);
        let out = KrausChannel::swap(3).apply(&rho.tensor(&xi)).unwrap();
        assert!(frobenius(&(out.matrix() - xi.tensor(&rho).matrix())) < 1e-14);
    }

    #[test]
    fn unitary_dual_is_unital() {
        let mut r = rng(3);
        let u = KrausChannel::unitary(random_unitary(4, &mut r)).unwrap();
        let out = u.apply_dual(&linalg::identity(4)).unwrap();
        assert!(frobenius(&(out - linalg::identity(4))) < 1e-13);
    }

    #[test]
    fn trace_duality_on_random_pairs() {
        let mut r = rng(4);
        for _ in 0..20 {
            let ch = KrausChannel::mixture(
                &[0.3, 0.7],
                &[
                    KrausChannel::unitary(random_unitary(3, &mut r)).unwrap(),
                    KrausChannel::unitary(random_unitary(3, &mut r)).unwrap(),
                ],
            )
            .unwrap();
            let a = random_hermitian(3, &mut r);
            let b = random_hermitian(3, &mut r);
            let lhs = linalg::trace_product(&a, &ch.apply_matrix(&b).unwrap());
            let rhs = linalg::trace_product(&ch.apply_dual(&a).unwrap(), &b);
            assert!((lhs - rhs).norm() < 1e-12);
        }
    }

    #[test]
    fn bistochastic_examples() {
        let mut r = rng(5);
        let u1 = KrausChannel::unitary(random_unitary(2, &mut r)).unwrap();
        let u2 = KrausChannel::unitary(random_unitary(2, &mut r)).unwrap();
        assert!(u1.is_bistochastic(1e-12));
        assert!(KrausChannel::mixture(&[0.5, 0.5], &[u1, u2]).unwrap().is_bistochastic(1e-12));

        let gamma = 0.3;
        let report = KrausChannel::amplitude_damping(gamma).unwrap().bistochastic_report(1e-9);
        assert!(!report.bistochastic);
        assert!(report.trace_defect < 1e-15);
        assert_abs_diff_eq!(report.unital_defect, gamma * 2f64.sqrt(), epsilon = 1e-14);
        let excess = KrausChannel::amplitude_damping(gamma).unwrap().op.image_of_identity() - linalg::identity(2);
        assert!(frobenius(&(excess - diag(&[gamma, -gamma]))) < 1e-14);
    }

    #[test]
    fn rejects_non_trace_preserving() {
        let err = KrausChannel::new(vec![diag(&[1.0, 0.5])]).unwrap_err();
        assert!(matches!(err, Error::Validation { ref check, .. } if check == "trace preservation"));
        assert!(KrausChannel::unitary(pauli_x() + pauli_z()).is_err());
    }

    #[test]
    fn superoperator_matches_kraus_action() {
        let mut r = rng(6);
        let k = hermitian_fn(&random_hermitian(3, &mut r), |x| x.cos());
        let op = Operation::new(vec![k, random_unitary(3, &mut r)]).unwrap();
        let rho = random_state(3, &mut r);
        let via = linalg::unvectorize(&(op.superoperator() * linalg::vectorize(rho.matrix())), 3, 3);
        assert!(frobenius(&(via - op.apply(rho.matrix()).unwrap())) < 1e-13);
    }
}
