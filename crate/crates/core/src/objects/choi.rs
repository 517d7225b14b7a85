use crate::linalg::{eigh, frobenius, partial_trace, ComplexMatrix, Subsystem};
use crate::objects::Operation;

/// Choi matrix `C = Σ_ij Φ(|i⟩⟨j|) ⊗ |i⟩⟨j|`, ordered output ⊗ input.
///
/// With this ordering a measure-and-prepare operation `ρ ↦ tr[Eρ] σ` has
/// Choi matrix `σ ⊗ Eᵀ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChoiMatrix {
    matrix: ComplexMatrix,
    dim_in: usize,
    dim_out: usize,
}

impl ChoiMatrix {
    pub fn of_operation(op: &Operation) -> Self {
        let (di, dout) = (op.dim_in(), op.dim_out());
        let mut matrix = ComplexMatrix::zeros(di * dout, di * dout);
        for k in op.kraus() {
            // |K⟩⟩ with entries K[a, i] at index a·d_in + i
            let v = ComplexMatrix::from_fn(di * dout, 1, |idx, _| k[(idx / di, idx % di)]);
            matrix += &v * v.adjoint();
        }
        ChoiMatrix {
            matrix,
            dim_in: di,
            dim_out: dout,
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    /// Eigenvalues in ascending order.
    pub fn spectrum(&self) -> Vec<f64> {
        eigh(&self.matrix).0
    }

    /// Number of eigenvalues above `tol`.
    pub fn rank(&self, tol: f64) -> usize {
        self.spectrum().into_iter().filter(|&v| v > tol).count()
    }

    /// Most negative eigenvalue, clamped at zero.
    pub fn positivity_defect(&self) -> f64 {
        (-self.spectrum()[0]).max(0.0)
    }

    /// Trace over the input factor: `Φ(1)`.
    pub fn output_marginal(&self) -> ComplexMatrix {
        partial_trace(&self.matrix, (self.dim_out, self.dim_in), Subsystem::System).expect("choi dimensions")
    }

    /// Trace over the output factor: `Φ*(1)ᵀ`.
    pub fn input_marginal(&self) -> ComplexMatrix {
        partial_trace(&self.matrix, (self.dim_out, self.dim_in), Subsystem::Probe).expect("choi dimensions")
    }

    /// Kraus operators `√λ_k · reshape(v_k)` from the eigenvectors with
    /// eigenvalue above `tol`. Always returns at least one operator.
    pub fn to_operation(&self, tol: f64) -> Operation {
        let (values, vectors) = eigh(&self.matrix);
        let (di, dout) = (self.dim_in, self.dim_out);
        let kraus: Vec<ComplexMatrix> = values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v > tol)
            .map(|(col, &v)| {
                let s = v.sqrt();
                ComplexMatrix::from_fn(dout, di, |a, i| vectors[(a * di + i, col)] * s)
            })
            .collect();
        if kraus.is_empty() {
            Operation::zero(di, dout)
        } else {
            Operation::new(kraus).expect("consistent shapes")
        }
    }

    pub fn distance(&self, other: &ChoiMatrix) -> f64 {
        frobenius(&(&self.matrix - &other.matrix))
    }
}
