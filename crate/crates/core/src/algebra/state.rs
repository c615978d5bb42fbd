use nalgebra::SymmetricEigen;
use num_complex::Complex64;

use super::{ComplexMatrix, Tolerances};
use crate::error::{Error, Result};

/// Hermitian, positive semidefinite, unit-trace matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix(ComplexMatrix);

impl DensityMatrix {
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        Self::with_tolerances(m, &Tolerances::DEFAULT)
    }

    pub fn with_tolerances(m: ComplexMatrix, tol: &Tolerances) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotDensityMatrix(format!(
                "{}x{} is not square",
                m.rows(),
                m.cols()
            )));
        }
        let defect = m.hermiticity_defect();
        if defect > tol.hermitian {
            return Err(Error::NotDensityMatrix(format!(
                "not Hermitian (defect {defect:e})"
            )));
        }
        let tr = m.trace();
        if (tr - Complex64::new(1.0, 0.0)).norm() > tol.trace {
            return Err(Error::NotDensityMatrix(format!("trace is {tr}")));
        }
        let lowest = min_eigenvalue(&m);
        if lowest < -tol.positivity {
            return Err(Error::NotDensityMatrix(format!(
                "negative eigenvalue {lowest:e}"
            )));
        }
        Ok(Self(m))
    }

    /// Symmetrizes and divides by the trace, then validates.
    pub fn normalized(m: &ComplexMatrix) -> Result<Self> {
        let h = m.hermitian_part();
        let tr = h.trace().re;
        if tr.abs() < f64::MIN_POSITIVE {
            return Err(Error::NotDensityMatrix("zero trace".into()));
        }
        Self::new(h.scale(1.0 / tr))
    }

    /// `𝕀/d`.
    pub fn maximally_mixed(d: usize) -> Self {
        Self(ComplexMatrix::identity(d).scale(1.0 / d as f64))
    }

    /// `|k⟩⟨k|`.
    pub fn basis(d: usize, k: usize) -> Result<Self> {
        if k >= d {
            return Err(Error::OutOfRange(format!("basis state {k} of dimension {d}")));
        }
        let mut m = ComplexMatrix::zeros(d, d);
        m[(k, k)] = Complex64::new(1.0, 0.0);
        Ok(Self(m))
    }

    /// `|ψ⟩⟨ψ|` for a normalized copy of `psi`.
    pub fn pure(psi: &[Complex64]) -> Result<Self> {
        let norm = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::NotDensityMatrix("zero or non-finite state vector".into()));
        }
        let v: Vec<_> = psi.iter().map(|z| z / norm).collect();
        Ok(Self(ComplexMatrix::outer(&v, &v)))
    }

    /// Uniform superposition `|+…+⟩⟨+…+|` of dimension `d`.
    pub fn plus(d: usize) -> Self {
        Self(ComplexMatrix::from_fn(d, d, |_, _| Complex64::new(1.0 / d as f64, 0.0)))
    }

    /// Diagonal state with the given populations.
    pub fn diagonal(p: &ProbVector) -> Self {
        Self(ComplexMatrix::real_diagonal(p.entries()))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    pub fn min_eigenvalue(&self) -> f64 {
        min_eigenvalue(&self.0)
    }

    /// Largest off-diagonal magnitude `max_{i≠j} |ρ_ij|`.
    pub fn max_coherence(&self) -> f64 {
        max_off_diagonal(&self.0)
    }
}

pub(crate) fn max_off_diagonal(m: &ComplexMatrix) -> f64 {
    let mut best = 0.0f64;
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if i != j {
                best = best.max(m[(i, j)].norm());
            }
        }
    }
    best
}

fn min_eigenvalue(m: &ComplexMatrix) -> f64 {
    if m.rows() == 0 {
        return 0.0;
    }
    let eig = SymmetricEigen::new(m.hermitian_part().to_nalgebra());
    eig.eigenvalues.iter().copied().fold(f64::INFINITY, f64::min)
}

/// Nonnegative vector summing to one.
#[derive(Clone, Debug, PartialEq)]
pub struct ProbVector(Vec<f64>);

impl ProbVector {
    pub fn new(p: Vec<f64>) -> Result<Self> {
        Self::with_tolerances(p, &Tolerances::DEFAULT)
    }

    pub fn with_tolerances(p: Vec<f64>, tol: &Tolerances) -> Result<Self> {
        if let Some((i, x)) = p.iter().enumerate().find(|(_, x)| !(**x >= 0.0) || !x.is_finite()) {
            return Err(Error::NotProbVector(format!("entry {i} is {x}")));
        }
        let s: f64 = p.iter().sum();
        if (s - 1.0).abs() > tol.probability_sum {
            return Err(Error::NotProbVector(format!("entries sum to {s}")));
        }
        Ok(Self(p))
    }

    pub fn uniform(d: usize) -> Self {
        Self(vec![1.0 / d as f64; d])
    }

    pub fn delta(d: usize, k: usize) -> Result<Self> {
        if k >= d {
            return Err(Error::OutOfRange(format!("state {k} of dimension {d}")));
        }
        let mut p = vec![0.0; d];
        p[k] = 1.0;
        Ok(Self(p))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[f64] {
        &self.0
    }
}
