//! Validated quantum objects: states, observables, operations, channels,
//! instruments and Choi matrices.

mod channel;
mod choi;
mod instrument;
mod observable;
mod state;

pub use channel::{BistochasticReport, KrausChannel, Operation};
pub use choi::ChoiMatrix;
pub use instrument::Instrument;
pub use observable::Observable;
pub use state::State;

use crate::error::{Error, Result};
use crate::linalg::{eigh, hermitian_part, ComplexMatrix};

/// Default tolerance for object validation.
pub const VALIDATION_TOL: f64 = 1e-9;

/// Gibbs state `e^{−βH}/tr[e^{−βH}]`, computed from the spectrum of `H`.
pub fn gibbs_state(h: &ComplexMatrix, beta: f64) -> Result<State> {
    if !(beta.is_finite() && beta > 0.0) {
        return Err(Error::Domain(format!("inverse temperature must be finite and positive, got {beta}")));
    }
    let h = hermitian_part(h, "Hamiltonian")?;
    let (energies, vectors) = eigh(&h);
    let ground = energies[0];
    // shifting by the ground energy keeps every weight in (0, 1]
    let weights: Vec<f64> = energies.iter().map(|e| (-beta * (e - ground)).exp()).collect();
    let z: f64 = weights.iter().sum();
    let d = h.nrows();
    let scaled = ComplexMatrix::from_fn(d, d, |i, j| vectors[(i, j)] * (weights[j] / z));
    Ok(State::trusted(scaled * vectors.adjoint()))
}
