use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json;
use crate::linalg::{self, eig_hermitian, eigh, frobenius, hermitian_part, ComplexMatrix};
use crate::objects::{State, VALIDATION_TOL};

/// A discrete POVM: labeled effects `0 ≤ E_x ≤ 1` summing to the identity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawObservable", into = "RawObservable")]
pub struct Observable {
    outcomes: Vec<String>,
    effects: Vec<ComplexMatrix>,
}

#[derive(Serialize, Deserialize)]
struct RawObservable {
    outcomes: Vec<String>,
    #[serde(with = "json::matrices")]
    effects: Vec<ComplexMatrix>,
}

impl TryFrom<RawObservable> for Observable {
    type Error = Error;

    fn try_from(raw: RawObservable) -> Result<Self> {
        Observable::new(raw.outcomes, raw.effects)
    }
}

impl From<Observable> for RawObservable {
    fn from(o: Observable) -> Self {
        RawObservable {
            outcomes: o.outcomes,
            effects: o.effects,
        }
    }
}

impl Observable {
    pub fn new<S: Into<String>>(outcomes: Vec<S>, effects: Vec<ComplexMatrix>) -> Result<Self> {
        Self::with_tol(outcomes, effects, VALIDATION_TOL)
    }

    /// Validates the effects. Errors name the offending outcome label.
    pub fn with_tol<S: Into<String>>(outcomes: Vec<S>, effects: Vec<ComplexMatrix>, tol: f64) -> Result<Self> {
        let outcomes: Vec<String> = outcomes.into_iter().map(Into::into).collect();
        if effects.is_empty() {
            return Err(Error::Dimension("observable needs at least one effect".into()));
        }
        if outcomes.len() != effects.len() {
            return Err(Error::Dimension(format!(
                "{} outcome labels for {} effects",
                outcomes.len(),
                effects.len()
            )));
        }
        for (i, label) in outcomes.iter().enumerate() {
            if outcomes[..i].contains(label) {
                return Err(Error::validation(format!("effect `{label}`"), "unique label", 1.0));
            }
        }
        let d = linalg::ensure_square(&effects[0], "effect")?;
        let mut clean = Vec::with_capacity(effects.len());
        for (label, e) in outcomes.iter().zip(&effects) {
            if e.shape() != (d, d) {
                return Err(Error::Dimension(format!(
                    "effect `{label}` is {}x{}, expected {d}x{d}",
                    e.nrows(),
                    e.ncols()
                )));
            }
            let e = hermitian_part(e, &format!("effect `{label}`"))?;
            let (values, _) = eigh(&e);
            let below = -values[0];
            let above = values[d - 1] - 1.0;
            let worst = below.max(above);
            if !(worst <= tol) {
                return Err(Error::validation(format!("effect `{label}`"), "eigenvalues in [0, 1]", worst));
            }
            clean.push(e);
        }
        let total = clean.iter().fold(linalg::zeros(d), |acc, e| acc + e);
        let defect = frobenius(&(total - linalg::identity(d)));
        if !(defect <= tol) {
            return Err(Error::validation("observable", "effects sum to identity", defect));
        }
        Ok(Observable {
            outcomes,
            effects: clean,
        })
    }

    /// Builds an observable from `(label, effect)` pairs.
    pub fn from_pairs<S: Into<String>>(pairs: Vec<(S, ComplexMatrix)>) -> Result<Self> {
        let (labels, effects): (Vec<S>, Vec<ComplexMatrix>) = pairs.into_iter().unzip();
        Self::new(labels, effects)
    }

    /// Sharp observable of the computational basis, labels `"0"`, `"1"`, …
    pub fn computational(d: usize) -> Self {
        Observable {
            outcomes: (0..d).map(|k| k.to_string()).collect(),
            effects: (0..d).map(|k| linalg::basis_projector(d, k)).collect(),
        }
    }

    /// Spectral measure of a Hermitian operator; outcome `m{n}` is the `n`-th
    /// distinct eigenvalue in ascending order.
    pub fn spectral(h: &ComplexMatrix, cluster_tol: f64) -> Result<Self> {
        let sd = eig_hermitian(h, cluster_tol)?;
        Ok(Observable {
            outcomes: (0..sd.len()).map(|n| format!("m{n}")).collect(),
            effects: sd.projectors,
        })
    }

    /// `n` outcomes, each with effect `1/n`.
    pub fn trivial(d: usize, n: usize) -> Self {
        let e = linalg::identity(d).unscale(n as f64);
        Observable {
            outcomes: (0..n).map(|k| k.to_string()).collect(),
            effects: vec![e; n],
        }
    }

    pub fn outcomes(&self) -> &[String] {
        &self.outcomes
    }

    pub fn effects(&self) -> &[ComplexMatrix] {
        &self.effects
    }

    pub fn effect(&self, x: usize) -> &ComplexMatrix {
        &self.effects[x]
    }

    pub fn len(&self) -> usize {
        self.effects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.effects.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.effects[0].nrows()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.outcomes.iter().position(|o| o == label)
    }

    /// Born-rule probabilities `tr[E_x ρ]`.
    pub fn probabilities(&self, rho: &State) -> Result<Vec<f64>> {
        linalg::ensure_same_dim(&self.effects[0], rho.matrix(), "observable vs state")?;
        Ok(self.effects.iter().map(|e| rho.expectation(e)).collect())
    }

    /// `max_{x,y} ‖E_x E_y − δ_{xy} E_x‖_F`.
    pub fn sharpness_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (x, ex) in self.effects.iter().enumerate() {
            for (y, ey) in self.effects.iter().enumerate() {
                let prod = ex * ey;
                let r = if x == y { prod - ex } else { prod };
                worst = worst.max(frobenius(&r));
            }
        }
        worst
    }

    pub fn is_sharp(&self, tol: f64) -> bool {
        self.sharpness_defect() <= tol
    }

    /// `max_x ‖E_x − (tr[E_x]/d)·1‖_F`; zero for observables whose effects
    /// are all proportional to the identity (including the zero effect).
    pub fn triviality_defect(&self) -> f64 {
        let d = self.dim();
        self.effects
            .iter()
            .map(|e| frobenius(&(e - linalg::identity(d) * (e.trace() / d as f64))))
            .fold(0.0, f64::max)
    }

    pub fn is_trivial(&self, tol: f64) -> bool {
        self.triviality_defect() <= tol
    }

    /// Largest total weight outside the top eigenvalue of any effect, or 1
    /// for a vanishing effect. Zero iff every effect is `λ P` with `P` a
    /// rank-1 projection and `λ > 0`.
    pub fn rank_one_defect(&self, tol: f64) -> f64 {
        self.effects
            .iter()
            .map(|e| {
                let (values, _) = eigh(e);
                let top = *values.last().unwrap();
                if top <= tol {
                    1.0
                } else {
                    values[..values.len() - 1].iter().map(|v| v.abs()).sum()
                }
            })
            .fold(0.0, f64::max)
    }

    pub fn is_rank_one(&self, tol: f64) -> bool {
        self.rank_one_defect(tol) <= tol
    }

    /// Merges outcomes: outcome `x` contributes to `labels[groups[x]]`.
    pub fn coarse_grain<S: Into<String>>(&self, groups: &[usize], labels: Vec<S>) -> Result<Observable> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if groups.len() != self.len() || groups.iter().any(|&g| g >= labels.len()) {
            return Err(Error::Dimension("coarse-graining map does not fit the observable".into()));
        }
        let d = self.dim();
        let mut effects = vec![linalg::zeros(d); labels.len()];
        for (x, &g) in groups.iter().enumerate() {
            effects[g] += &self.effects[x];
        }
        Observable::new(labels, effects)
    }

    /// Largest Frobenius distance between corresponding effects; infinite if
    /// the outcome counts or dimensions differ.
    pub fn distance(&self, other: &Observable) -> f64 {
        if self.len() != other.len() || self.dim() != other.dim() {
            return f64::INFINITY;
        }
        self.effects
            .iter()
            .zip(&other.effects)
            .map(|(a, b)| frobenius(&(a - b)))
            .fold(0.0, f64::max)
    }
}
