//! JSON representation of complex matrices.
//!
//! Complex entries are `[re, im]` pairs (a bare number is accepted as a real
//! entry) and matrices are row-major nested arrays. A flat list of numbers is
//! read as a real diagonal matrix.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{c, diag, ComplexMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Real(f64),
    Complex([f64; 2]),
}

impl Entry {
    fn value(self) -> num_complex::Complex64 {
        match self {
            Entry::Real(re) => c(re, 0.0),
            Entry::Complex([re, im]) => c(re, im),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixSpec {
    Diagonal(Vec<f64>),
    Dense(Vec<Vec<Entry>>),
}

impl MatrixSpec {
    pub fn from_matrix(m: &ComplexMatrix) -> Self {
        MatrixSpec::Dense(
            m.row_iter()
                .map(|row| row.iter().map(|z| Entry::Complex([z.re, z.im])).collect())
                .collect(),
        )
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix> {
        match self {
            MatrixSpec::Diagonal(values) if values.is_empty() => {
                Err(Error::Dimension("empty diagonal matrix".into()))
            }
            MatrixSpec::Diagonal(values) => Ok(diag(values)),
            MatrixSpec::Dense(rows) => {
                let n = rows.len();
                let m = rows.first().map_or(0, Vec::len);
                if n == 0 || m == 0 || rows.iter().any(|r| r.len() != m) {
                    return Err(Error::Dimension("ragged or empty matrix".into()));
                }
                Ok(ComplexMatrix::from_fn(n, m, |i, j| rows[i][j].value()))
            }
        }
    }

    /// Matrix side length without building the matrix.
    pub fn rows(&self) -> usize {
        match self {
            MatrixSpec::Diagonal(v) => v.len(),
            MatrixSpec::Dense(rows) => rows.len(),
        }
    }
}

/// `#[serde(with = "crate::json::matrix")]` adapter for a single matrix.
pub mod matrix {
    use super::*;

    pub fn serialize<S: Serializer>(m: &ComplexMatrix, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixSpec::from_matrix(m).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<ComplexMatrix, D::Error> {
        MatrixSpec::deserialize(d)?
            .to_matrix()
            .map_err(serde::de::Error::custom)
    }
}

/// Adapter for a list of matrices.
pub mod matrices {
    use super::*;

    pub fn serialize<S: Serializer>(ms: &[ComplexMatrix], s: S) -> std::result::Result<S::Ok, S::Error> {
        ms.iter().map(MatrixSpec::from_matrix).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<ComplexMatrix>, D::Error> {
        Vec::<MatrixSpec>::deserialize(d)?
            .iter()
            .map(|m| m.to_matrix().map_err(serde::de::Error::custom))
            .collect()
    }
}
