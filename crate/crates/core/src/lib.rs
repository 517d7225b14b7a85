//! Thermodynamically free quantum measurements.
//!
//! A measurement scheme couples a system to a probe through an interaction
//! channel and reads out a pointer observable on the probe. The scheme is
//! *thermodynamically free* when the probe starts in its Gibbs state, the
//! interaction is bistochastic and conserves the additive Hamiltonian, and the
//! pointer commutes with the probe Hamiltonian. Instruments realized this way
//! are *thermal instruments*.
//!
//! The crate is organized bottom-up:
//!
//! - [`linalg`] and [`entropy`]: Hermitian spectral tools, partial traces,
//!   von Neumann and relative entropies.
//! - [`objects`]: validated [`State`], [`Observable`], [`KrausChannel`],
//!   [`Instrument`] and [`ChoiMatrix`] values, plus [`gibbs_state`].
//! - [`scheme`]: [`MeasurementScheme`], freeness validation, the instrument
//!   and conjugate channel a scheme induces, and scheme constructors.
//! - [`thermo`]: extractable work, heat, Groenewold information gain, skew
//!   information and the second-law report.
//! - [`classify`]: thermality, covariance, Gibbs preservation, nuclearity,
//!   quasi-completeness and the energy-compatibility constructions.
//! - [`scenario`]: JSON scenario files, check execution and CSV sweeps, as
//!   driven by the `thermeas` binary.
//!
//! ```
//! use thermal_instruments::{linalg::diag, Observable, scheme::trivial_scheme};
//!
//! let h = diag(&[0.0, 1.0]);
//! let e = Observable::spectral(&h, 1e-8).unwrap();
//! let scheme = trivial_scheme(&e, &h, 1.0).unwrap();
//! assert!(scheme.validate(1e-12, 4).unwrap().verdict);
//! ```

pub mod classify;
pub mod entropy;
pub mod error;
pub mod json;
pub mod linalg;
pub mod objects;
pub mod random;
pub mod scenario;
pub mod scheme;
pub mod thermo;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, C64};
pub use objects::{gibbs_state, ChoiMatrix, Instrument, KrausChannel, Observable, Operation, State};
pub use scheme::MeasurementScheme;
