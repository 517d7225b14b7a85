//! Shared fixtures and reference computations for the integration tests.
//!
//! The reference functions work directly on nalgebra eigendecompositions
//! and closed forms so they do not share code paths with the library.

#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;

use thermal_instruments::linalg::diag;
use thermal_instruments::random::{random_commuting_observable, random_diagonal_povm, rng};
use thermal_instruments::scheme::{random_free_scheme, trivial_scheme, MeasurementScheme};
use thermal_instruments::{ComplexMatrix, Observable};

/// Deterministic family of free schemes cycling through the shapes of
/// [`free_scheme_of_shape`].
pub fn free_schemes(count: usize, seed: u64) -> Vec<MeasurementScheme> {
    let mut r = rng(seed);
    (0..count).map(|i| free_scheme_of_shape(i % 4, &mut r)).collect()
}

/// A free scheme drawn from `seed`, of shape `seed % 4`.
pub fn free_scheme(seed: u64) -> MeasurementScheme {
    free_scheme_of_shape((seed % 4) as usize, &mut rng(seed))
}

/// Shapes: 0 resonant qubit pair, 1 resonant equally spaced qutrit pair,
/// 2 qubit with a qutrit probe whose excited level is degenerate, 3 swap
/// scheme for a random commuting observable.
pub fn free_scheme_of_shape<R: Rng + ?Sized>(shape: usize, r: &mut R) -> MeasurementScheme {
    let beta = r.random_range(0.3..3.0);
    let w: f64 = r.random_range(0.5..2.0);
    let mix = r.random_range(1..=3);
    let scheme_seed: u64 = r.random();
    match shape {
        0 => {
            let h = diag(&[0.0, w]);
            let n = r.random_range(2..=3);
            let z = random_diagonal_povm(2, n, r);
            random_free_scheme(&h, &h, beta, &z, scheme_seed, mix).unwrap()
        }
        1 => {
            let h = diag(&[0.0, w, 2.0 * w]);
            let z = random_diagonal_povm(3, 2, r);
            random_free_scheme(&h, &h, beta, &z, scheme_seed, mix).unwrap()
        }
        2 => {
            let hs = diag(&[0.0, w]);
            let ha = diag(&[0.0, w, w]);
            let z = random_commuting_observable(&ha, 2, r);
            random_free_scheme(&hs, &ha, beta, &z, scheme_seed, mix).unwrap()
        }
        _ => {
            let d = r.random_range(2..=4);
            let energies = random_energies(d, r);
            let h = diag(&energies);
            let e = random_commuting_observable(&h, r.random_range(2..=3), r);
            trivial_scheme(&e, &h, beta).unwrap()
        }
    }
}

/// Energies in `[0, 2)`, with a repeated level one time in three.
pub fn random_energies<R: Rng + ?Sized>(d: usize, r: &mut R) -> Vec<f64> {
    let mut e: Vec<f64> = (0..d).map(|_| r.random_range(0.0..2.0)).collect();
    if d > 2 && r.random_range(0..3) == 0 {
        e[1] = e[0];
    }
    e
}

pub fn random_observable_pair<R: Rng + ?Sized>(d: usize, r: &mut R) -> (ComplexMatrix, Observable) {
    let h = diag(&random_energies(d, r));
    let e = random_commuting_observable(&h, r.random_range(2..=4), r);
    (h, e)
}

/// Eigenvalues and eigenvectors of a Hermitian matrix, straight from nalgebra.
fn spectral(a: &DMatrix<Complex64>) -> (Vec<f64>, DMatrix<Complex64>) {
    let sym = (a + a.adjoint()).unscale(2.0);
    let eig = sym.symmetric_eigen();
    (eig.eigenvalues.iter().copied().collect(), eig.eigenvectors)
}

/// `tr[A ln A] − tr[A ln B]` for positive `A`, `B` with `B` full rank.
pub fn reference_relative_entropy(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> f64 {
    let (av, _) = spectral(a);
    let (bv, bvec) = spectral(b);
    let log_b = &bvec * DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
        bv.len(),
        bv.iter().map(|&x| Complex64::new(x.ln(), 0.0)),
    )) * bvec.adjoint();
    let a_log_a: f64 = av.iter().filter(|&&x| x > 1e-300).map(|&x| x * x.ln()).sum();
    a_log_a - (a * log_b).trace().re
}

/// Boltzmann weights of a list of energies.
pub fn boltzmann(energies: &[f64], beta: f64) -> Vec<f64> {
    let w: Vec<f64> = energies.iter().map(|&e| (-beta * e).exp()).collect();
    let z: f64 = w.iter().sum();
    w.into_iter().map(|x| x / z).collect()
}

pub fn reference_shannon(p: &[f64]) -> f64 {
    -p.iter().filter(|&&x| x > 0.0).map(|&x| x * x.ln()).sum::<f64>()
}

/// `e^{−βH}/Z` by direct diagonalization.
pub fn reference_gibbs(h: &DMatrix<Complex64>, beta: f64) -> DMatrix<Complex64> {
    let (vals, vecs) = spectral(h);
    let p = boltzmann(&vals, beta);
    let d = DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
        p.len(),
        p.iter().map(|&x| Complex64::new(x, 0.0)),
    ));
    &vecs * d * vecs.adjoint()
}

/// `tr_A` of an operator on `C^{ds} ⊗ C^{da}`, index `s * da + a`.
pub fn reference_trace_probe(m: &DMatrix<Complex64>, ds: usize, da: usize) -> DMatrix<Complex64> {
    DMatrix::from_fn(ds, ds, |i, j| (0..da).map(|a| m[(i * da + a, j * da + a)]).sum())
}

/// `tr_S` of an operator on `C^{ds} ⊗ C^{da}`.
pub fn reference_trace_system(m: &DMatrix<Complex64>, ds: usize, da: usize) -> DMatrix<Complex64> {
    DMatrix::from_fn(da, da, |a, b| (0..ds).map(|s| m[(s * da + a, s * da + b)]).sum())
}

pub fn fro(a: &DMatrix<Complex64>) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}
