use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failures raised while building or checking quantum objects.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// An object failed one of its defining checks. `magnitude` is the size of
    /// the worst violation found.
    #[error("{object}: {check} violated (magnitude {magnitude:.3e})")]
    Validation {
        object: String,
        check: String,
        magnitude: f64,
    },

    #[error("domain error: {0}")]
    Domain(String),

    /// A documented precondition of an operation does not hold.
    #[error("precondition `{check}` failed: defect {defect:.3e} exceeds tolerance {tol:.1e}")]
    Precondition { check: String, defect: f64, tol: f64 },
}

impl Error {
    pub(crate) fn validation(object: impl Into<String>, check: impl Into<String>, magnitude: f64) -> Self {
        Error::Validation {
            object: object.into(),
            check: check.into(),
            magnitude,
        }
    }

    pub(crate) fn precondition(check: impl Into<String>, defect: f64, tol: f64) -> Self {
        Error::Precondition {
            check: check.into(),
            defect,
            tol,
        }
    }
}
