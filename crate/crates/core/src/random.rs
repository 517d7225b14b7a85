//! Seeded samplers for states, unitaries and observables.
//!
//! Every sampler draws from a caller-supplied generator; [`rng`] and
//! [`derive_seed`] give reproducible per-task streams.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::linalg::{self, c, eig_hermitian, hermitian_fn, ComplexMatrix, DEFAULT_CLUSTER_TOL};
use crate::objects::{Observable, State};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// SplitMix64 mix of `(base, index)`, used to give each task its own stream.
pub fn derive_seed(base: u64, index: u64) -> u64 {
    let mut z = base ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Complex Ginibre matrix with i.i.d. standard complex normal entries.
pub fn ginibre<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> ComplexMatrix {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    ComplexMatrix::from_fn(rows, cols, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        c(re * s, im * s)
    })
}

/// Haar-random unitary (QR of a Ginibre matrix with phase correction).
pub fn random_unitary<R: Rng + ?Sized>(d: usize, rng: &mut R) -> ComplexMatrix {
    let qr = ginibre(d, d, rng).qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..d {
        let rjj = r[(j, j)];
        let phase = if rjj.norm() > 0.0 { rjj / rjj.norm() } else { c(1.0, 0.0) };
        let mut col = q.column_mut(j);
        col *= phase;
    }
    q
}

/// Random Hermitian matrix `(G + G†)/2`.
pub fn random_hermitian<R: Rng + ?Sized>(d: usize, rng: &mut R) -> ComplexMatrix {
    let g = ginibre(d, d, rng);
    (&g + g.adjoint()).unscale(2.0)
}

/// Full-rank mixed state from the Hilbert–Schmidt measure.
pub fn random_state<R: Rng + ?Sized>(d: usize, rng: &mut R) -> State {
    let g = ginibre(d, d, rng);
    let w = &g * g.adjoint();
    let tr = w.trace().re;
    State::new(w.unscale(tr)).expect("Ginibre product is a valid state")
}

/// Haar-random pure state.
pub fn random_pure_state<R: Rng + ?Sized>(d: usize, rng: &mut R) -> State {
    let v = ginibre(d, 1, rng);
    let psi: Vec<_> = v.iter().copied().collect();
    State::pure(&psi).expect("nonzero Gaussian vector")
}

/// Uniform point on the probability simplex with `n` vertices.
pub fn random_simplex<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<f64> {
    let draws: Vec<f64> = (0..n).map(|_| -(1.0 - rng.random::<f64>()).ln()).collect();
    let total: f64 = draws.iter().sum();
    draws.into_iter().map(|x| x / total).collect()
}

/// Observable with diagonal effects `E_x = Σ_m p(x|m)|m⟩⟨m|`, each column
/// `p(·|m)` uniform on the simplex.
pub fn random_diagonal_povm<R: Rng + ?Sized>(d: usize, n: usize, rng: &mut R) -> Observable {
    let columns: Vec<Vec<f64>> = (0..d).map(|_| random_simplex(n, rng)).collect();
    let effects = (0..n)
        .map(|x| linalg::diag(&columns.iter().map(|col| col[x]).collect::<Vec<_>>()))
        .collect();
    Observable::new((0..n).map(|x| format!("x{x}")).collect(), effects).expect("columns sum to one")
}

/// Random `n`-outcome POVM on `C^d`: `E_x = S^{-1/2} A_x S^{-1/2}` with
/// Wishart `A_x` and `S = Σ A_x`.
pub fn random_povm<R: Rng + ?Sized>(d: usize, n: usize, rng: &mut R) -> Observable {
    let blocks = random_povm_blocks(d, n, rng);
    Observable::new((0..n).map(|x| format!("x{x}")).collect(), blocks).expect("normalized Wishart POVM")
}

fn random_povm_blocks<R: Rng + ?Sized>(d: usize, n: usize, rng: &mut R) -> Vec<ComplexMatrix> {
    let parts: Vec<ComplexMatrix> = (0..n)
        .map(|_| {
            let g = ginibre(d, d, rng);
            &g * g.adjoint()
        })
        .collect();
    let total = parts.iter().fold(linalg::zeros(d), |acc, a| acc + a);
    let inv_root = hermitian_fn(&total, |x| 1.0 / x.sqrt());
    parts.iter().map(|a| &inv_root * a * &inv_root).collect()
}

/// Random `n`-outcome observable commuting with `h`: an independent random
/// POVM inside each eigenspace of `h`.
pub fn random_commuting_observable<R: Rng + ?Sized>(h: &ComplexMatrix, n: usize, rng: &mut R) -> Observable {
    let sd = eig_hermitian(h, DEFAULT_CLUSTER_TOL).expect("Hermitian input");
    let d = h.nrows();
    let mut effects = vec![linalg::zeros(d); n];
    for k in 0..sd.len() {
        let basis = sd.basis(k);
        let local = random_povm_blocks(basis.ncols(), n, rng);
        for (e, block) in effects.iter_mut().zip(local) {
            *e += basis * block * basis.adjoint();
        }
    }
    Observable::new((0..n).map(|x| format!("x{x}")).collect(), effects).expect("blockwise POVM")
}
