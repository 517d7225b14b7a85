//! Entropies in nats, with the convention `0 · ln 0 = 0`.

use crate::error::{Error, Result};
use crate::linalg::eigh;
use crate::objects::State;

/// Eigenvalues of `σ` at or below this count as outside its support.
pub const SUPPORT_TOL: f64 = 1e-10;

/// `−Σ p ln p` over the positive entries.
pub fn shannon_entropy(p: &[f64]) -> f64 {
    -p.iter().filter(|&&x| x > 0.0).map(|&x| x * x.ln()).sum::<f64>()
}

/// Classical relative entropy `Σ p ln(p/q)`; infinite if `p > 0` where `q = 0`.
pub fn classical_relative_entropy(p: &[f64], q: &[f64]) -> f64 {
    let mut acc = 0.0;
    for (&pi, &qi) in p.iter().zip(q) {
        if pi <= 0.0 {
            continue;
        }
        if qi <= 0.0 {
            return f64::INFINITY;
        }
        acc += pi * (pi / qi).ln();
    }
    acc
}

/// `S(ρ) = −tr[ρ ln ρ]`.
pub fn von_neumann_entropy(rho: &State) -> f64 {
    shannon_entropy(&rho.spectrum())
}

/// `S(ρ‖σ) = tr[ρ(ln ρ − ln σ)]`, or `f64::INFINITY` when the support of `ρ`
/// is not contained in the support of `σ`.
pub fn relative_entropy(rho: &State, sigma: &State) -> Result<f64> {
    if rho.dim() != sigma.dim() {
        return Err(Error::Dimension(format!(
            "relative entropy of {}-dimensional and {}-dimensional states",
            rho.dim(),
            sigma.dim()
        )));
    }
    let (r_vals, r_vecs) = eigh(rho.matrix());
    let (s_vals, s_vecs) = eigh(sigma.matrix());
    // overlaps[i][j] = |⟨r_i|s_j⟩|²
    let overlap = r_vecs.adjoint() * &s_vecs;
    let mut cross = 0.0;
    let mut leak = 0.0;
    for (i, &lambda) in r_vals.iter().enumerate() {
        if lambda <= 0.0 {
            continue;
        }
        for (j, &mu) in s_vals.iter().enumerate() {
            let w = lambda * overlap[(i, j)].norm_sqr();
            if mu <= SUPPORT_TOL {
                leak += w;
            } else {
                cross += w * mu.ln();
            }
        }
    }
    if leak > SUPPORT_TOL {
        return Ok(f64::INFINITY);
    }
    Ok(-shannon_entropy(&r_vals) - cross)
}
