//! Dense complex linear algebra used throughout the crate.
//!
//! Operators are plain `nalgebra` matrices of `Complex64`. Bipartite operators
//! use the ordering `system ⊗ probe`, so the basis index of `|s⟩⊗|a⟩` is
//! `s * d_probe + a`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;
pub type ComplexMatrix = DMatrix<C64>;

/// Hermiticity defects at or below this are repaired by symmetrizing.
pub const HERMITICITY_TOL: f64 = 1e-9;
/// Default eigenvalue clustering tolerance, relative to the spectral range.
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-8;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn identity(d: usize) -> ComplexMatrix {
    ComplexMatrix::identity(d, d)
}

pub fn zeros(d: usize) -> ComplexMatrix {
    ComplexMatrix::zeros(d, d)
}

/// Real diagonal matrix.
pub fn diag(values: &[f64]) -> ComplexMatrix {
    let d = values.len();
    ComplexMatrix::from_fn(d, d, |i, j| if i == j { c(values[i], 0.0) } else { C64::default() })
}

/// Builds a matrix from row-major real entries.
pub fn real_matrix(rows: usize, cols: usize, entries: &[f64]) -> ComplexMatrix {
    assert_eq!(entries.len(), rows * cols);
    ComplexMatrix::from_fn(rows, cols, |i, j| c(entries[i * cols + j], 0.0))
}

pub fn ket_bra(ket: &[C64], bra: &[C64]) -> ComplexMatrix {
    ComplexMatrix::from_fn(ket.len(), bra.len(), |i, j| ket[i] * bra[j].conj())
}

/// `|ψ⟩⟨ψ|` for a (not necessarily normalized) vector.
pub fn projector(psi: &[C64]) -> ComplexMatrix {
    ket_bra(psi, psi)
}

pub fn basis_projector(d: usize, k: usize) -> ComplexMatrix {
    let mut m = zeros(d);
    m[(k, k)] = c(1.0, 0.0);
    m
}

pub fn pauli_x() -> ComplexMatrix {
    real_matrix(2, 2, &[0.0, 1.0, 1.0, 0.0])
}

pub fn pauli_y() -> ComplexMatrix {
    ComplexMatrix::from_row_slice(2, 2, &[C64::default(), c(0.0, -1.0), c(0.0, 1.0), C64::default()])
}

pub fn pauli_z() -> ComplexMatrix {
    diag(&[1.0, -1.0])
}

pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a.kronecker(b)
}

/// Frobenius norm.
pub fn frobenius(a: &ComplexMatrix) -> f64 {
    a.norm()
}

pub fn trace(a: &ComplexMatrix) -> C64 {
    a.trace()
}

/// `Re tr[a b]` without forming the product.
pub fn trace_product(a: &ComplexMatrix, b: &ComplexMatrix) -> C64 {
    let mut acc = C64::default();
    for i in 0..a.nrows() {
        for k in 0..a.ncols() {
            acc += a[(i, k)] * b[(k, i)];
        }
    }
    acc
}

pub fn ensure_square(a: &ComplexMatrix, what: &str) -> Result<usize> {
    if a.nrows() == 0 || a.nrows() != a.ncols() {
        return Err(Error::Dimension(format!(
            "{what} must be a nonempty square matrix, got {}x{}",
            a.nrows(),
            a.ncols()
        )));
    }
    Ok(a.nrows())
}

pub fn ensure_same_dim(a: &ComplexMatrix, b: &ComplexMatrix, what: &str) -> Result<usize> {
    let d = ensure_square(a, what)?;
    if b.shape() != a.shape() {
        return Err(Error::Dimension(format!(
            "{what}: {}x{} vs {}x{}",
            a.nrows(),
            a.ncols(),
            b.nrows(),
            b.ncols()
        )));
    }
    Ok(d)
}

/// `‖A − A†‖_F`.
pub fn hermiticity_defect(a: &ComplexMatrix) -> f64 {
    frobenius(&(a - a.adjoint()))
}

/// Returns `(A + A†)/2` if `A` is square and Hermitian within `HERMITICITY_TOL`.
pub fn hermitian_part(a: &ComplexMatrix, what: &str) -> Result<ComplexMatrix> {
    ensure_square(a, what)?;
    let defect = hermiticity_defect(a);
    if !defect.is_finite() || defect > HERMITICITY_TOL {
        return Err(Error::validation(what, "hermiticity", defect));
    }
    Ok(symmetrize(a))
}

pub(crate) fn symmetrize(a: &ComplexMatrix) -> ComplexMatrix {
    (a + a.adjoint()).unscale(2.0)
}

/// `‖AB − BA‖_F`.
pub fn commutator_defect(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<f64> {
    ensure_same_dim(a, b, "commutator operands")?;
    Ok(frobenius(&(a * b - b * a)))
}

/// Unclustered Hermitian eigendecomposition: eigenvalues ascending, with the
/// matching eigenvectors as columns. The input is assumed Hermitian.
pub fn eigh(a: &ComplexMatrix) -> (Vec<f64>, ComplexMatrix) {
    let eig = symmetrize(a).symmetric_eigen();
    let d = a.nrows();
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut vectors = ComplexMatrix::zeros(d, d);
    for (col, &i) in order.iter().enumerate() {
        vectors.set_column(col, &eig.eigenvectors.column(i));
    }
    (values, vectors)
}

/// Applies a real function to a Hermitian matrix through its spectrum.
pub fn hermitian_fn(a: &ComplexMatrix, f: impl Fn(f64) -> f64) -> ComplexMatrix {
    let (values, vectors) = eigh(a);
    let scaled = ComplexMatrix::from_fn(a.nrows(), a.ncols(), |i, j| vectors[(i, j)] * f(values[j]));
    scaled * vectors.adjoint()
}

/// Square root of a positive semidefinite matrix. Eigenvalues below the
/// round-off floor `d·ε·max(1, ‖A‖)` are treated as zero, since their square
/// roots would otherwise leak `√ε`-sized errors into the result.
pub fn psd_sqrt(a: &ComplexMatrix) -> ComplexMatrix {
    let (values, vectors) = eigh(a);
    let scale = values.iter().fold(1.0_f64, |m, v| m.max(v.abs()));
    let floor = a.nrows().max(1) as f64 * f64::EPSILON * scale * 16.0;
    let scaled = ComplexMatrix::from_fn(a.nrows(), a.ncols(), |i, j| {
        let x = values[j];
        vectors[(i, j)] * if x <= floor { 0.0 } else { x.sqrt() }
    });
    scaled * vectors.adjoint()
}

/// `e^{-itH}` for Hermitian `H`.
pub fn time_evolution(h: &ComplexMatrix, t: f64) -> ComplexMatrix {
    let (values, vectors) = eigh(h);
    let d = h.nrows();
    let scaled = ComplexMatrix::from_fn(d, d, |i, j| vectors[(i, j)] * C64::from_polar(1.0, -t * values[j]));
    scaled * vectors.adjoint()
}

/// Spectral decomposition with eigenvalues clustered into distinct levels.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    /// Distinct eigenvalues, ascending.
    pub eigenvalues: Vec<f64>,
    /// Spectral projector of each distinct eigenvalue.
    pub projectors: Vec<ComplexMatrix>,
    pub multiplicities: Vec<usize>,
    bases: Vec<ComplexMatrix>,
}

impl SpectralDecomposition {
    pub fn dim(&self) -> usize {
        self.projectors.first().map_or(0, |p| p.nrows())
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Orthonormal basis (as columns) of the `n`-th eigenspace.
    pub fn basis(&self, n: usize) -> &ComplexMatrix {
        &self.bases[n]
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.multiplicities.iter().all(|&m| m == 1)
    }

    /// `Σ λ_n P_n`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let d = self.dim();
        self.eigenvalues
            .iter()
            .zip(&self.projectors)
            .fold(zeros(d), |acc, (&l, p)| acc + p.scale(l))
    }
}

/// Hermitian eigendecomposition with degeneracy clustering. Eigenvalues whose
/// consecutive gap is at most `cluster_tol · max(1, spectral range)` share one
/// projector.
pub fn eig_hermitian(a: &ComplexMatrix, cluster_tol: f64) -> Result<SpectralDecomposition> {
    let a = hermitian_part(a, "eigendecomposition input")?;
    let d = a.nrows();
    let (values, vectors) = eigh(&a);
    let range = values[d - 1] - values[0];
    let threshold = cluster_tol * range.max(1.0);

    let mut groups: Vec<Vec<usize>> = vec![vec![0]];
    for i in 1..d {
        if values[i] - values[i - 1] <= threshold {
            groups.last_mut().unwrap().push(i);
        } else {
            groups.push(vec![i]);
        }
    }

    let mut eigenvalues = Vec::with_capacity(groups.len());
    let mut projectors = Vec::with_capacity(groups.len());
    let mut multiplicities = Vec::with_capacity(groups.len());
    let mut bases = Vec::with_capacity(groups.len());
    for group in groups {
        let mean = group.iter().map(|&i| values[i]).sum::<f64>() / group.len() as f64;
        let mut basis = ComplexMatrix::zeros(d, group.len());
        for (col, &i) in group.iter().enumerate() {
            basis.set_column(col, &vectors.column(i));
        }
        projectors.push(&basis * basis.adjoint());
        eigenvalues.push(mean);
        multiplicities.push(group.len());
        bases.push(basis);
    }
    Ok(SpectralDecomposition {
        eigenvalues,
        projectors,
        multiplicities,
        bases,
    })
}

/// Which factor of `system ⊗ probe` to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    System,
    Probe,
}

/// Partial trace of an operator on `C^{d_s} ⊗ C^{d_a}`.
pub fn partial_trace(m: &ComplexMatrix, dims: (usize, usize), keep: Subsystem) -> Result<ComplexMatrix> {
    let (ds, da) = dims;
    let d = ensure_square(m, "partial trace input")?;
    if ds == 0 || da == 0 || d != ds * da {
        return Err(Error::Dimension(format!(
            "partial trace: operator of dimension {d} is not {ds}x{da}"
        )));
    }
    Ok(match keep {
        Subsystem::System => ComplexMatrix::from_fn(ds, ds, |s, t| (0..da).map(|a| m[(s * da + a, t * da + a)]).sum()),
        Subsystem::Probe => ComplexMatrix::from_fn(da, da, |a, b| (0..ds).map(|s| m[(s * da + a, s * da + b)]).sum()),
    })
}

/// Row-major vectorization `vec(ρ)[i·d + j] = ρ_ij`.
pub fn vectorize(m: &ComplexMatrix) -> nalgebra::DVector<C64> {
    let (r, cols) = m.shape();
    nalgebra::DVector::from_fn(r * cols, |k, _| m[(k / cols, k % cols)])
}

pub fn unvectorize(v: &nalgebra::DVector<C64>, rows: usize, cols: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |i, j| v[i * cols + j])
}

/// Superoperator of `ρ ↦ −i[H, ρ]` in the row-major vectorization.
pub fn commutator_superoperator(h: &ComplexMatrix) -> ComplexMatrix {
    let d = h.nrows();
    let id = identity(d);
    (kron(h, &id) - kron(&id, &h.transpose())) * c(0.0, -1.0)
}
