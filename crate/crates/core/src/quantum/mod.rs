//! Hidden quantum Markov models: a `d`-level system driven by one quantum
//! operation `𝒦_s ρ = Σᵢ Kᵢ(s) ρ Kᵢ(s)†` per emitted symbol, with
//! `Σ_{s,i} Kᵢ(s)† Kᵢ(s) = 𝕀`.

mod convert;

pub use convert::{coherence_check, embed_classical, pure_from_reversible, vn_generator};

use nalgebra::SymmetricEigen;

use crate::algebra::{
    self, apply_kraus, effect, ComplexMatrix, DensityMatrix, Stationary, Tolerances,
};
use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::process::{initial_or_default, Process};
use crate::validate::Diagnostics;

#[derive(Clone, Debug, PartialEq)]
pub struct HqmmModel {
    alphabet: Alphabet,
    dim: usize,
    operations: Vec<Vec<ComplexMatrix>>,
    effects: Vec<ComplexMatrix>,
    initial: Option<DensityMatrix>,
}

impl HqmmModel {
    /// Validated constructor; `operations[s]` lists the Kraus operators of
    /// symbol `s`.
    pub fn new(alphabet: Alphabet, dim: usize, operations: Vec<Vec<ComplexMatrix>>, initial: Option<DensityMatrix>) -> Result<Self> {
        let m = Self::from_parts(alphabet, dim, operations, initial)?;
        m.validate().into_result()?;
        Ok(m)
    }

    /// Checks shapes only.
    pub fn from_parts(alphabet: Alphabet, dim: usize, operations: Vec<Vec<ComplexMatrix>>, initial: Option<DensityMatrix>) -> Result<Self> {
        if operations.len() != alphabet.len() {
            return Err(Error::Dimension(format!(
                "{} operations for {} symbols",
                operations.len(),
                alphabet.len()
            )));
        }
        if dim == 0 {
            return Err(Error::Dimension("zero-dimensional model".into()));
        }
        for (s, ops) in operations.iter().enumerate() {
            for (i, k) in ops.iter().enumerate() {
                if k.shape() != (dim, dim) {
                    return Err(Error::Dimension(format!(
                        "K_{i}({}) is {}x{}, expected {dim}x{dim}",
                        alphabet.name(s),
                        k.rows(),
                        k.cols()
                    )));
                }
            }
        }
        if let Some(rho) = &initial {
            if rho.dim() != dim {
                return Err(Error::Dimension(format!("initial state of dimension {}", rho.dim())));
            }
        }
        let effects = operations
            .iter()
            .map(|ops| effect(ops, dim))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            alphabet,
            dim,
            operations,
            effects,
            initial,
        })
    }

    /// Completeness of the whole set and trace non-increase per symbol.
    pub fn validate(&self) -> Diagnostics {
        let tol = Tolerances::DEFAULT;
        let mut diag = Diagnostics::new();
        let identity = ComplexMatrix::identity(self.dim);
        let total = match effect(self.operations.iter().flatten(), self.dim) {
            Ok(e) => e,
            Err(e) => {
                diag.push("kraus", e.to_string());
                return diag;
            }
        };
        let defect = total.max_abs_diff(&identity);
        if defect > tol.completeness {
            diag.push(
                "completeness",
                format!("sum over symbols of K†K differs from the identity by {defect:e}"),
            );
        }
        for (s, e) in self.effects.iter().enumerate() {
            let top = SymmetricEigen::new(e.hermitian_part().to_nalgebra())
                .eigenvalues
                .iter()
                .copied()
                .fold(f64::NEG_INFINITY, f64::max);
            if top > 1.0 + tol.completeness {
                diag.push(
                    format!("operation {}", self.alphabet.name(s)),
                    format!("trace increasing: largest eigenvalue of sum K†K is {top}"),
                );
            }
        }
        diag
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn operations(&self) -> &[Vec<ComplexMatrix>] {
        &self.operations
    }

    pub fn kraus(&self, symbol: usize) -> &[ComplexMatrix] {
        &self.operations[symbol]
    }

    pub fn initial(&self) -> Option<&DensityMatrix> {
        self.initial.as_ref()
    }

    pub fn with_initial(mut self, initial: Option<DensityMatrix>) -> Result<Self> {
        if let Some(rho) = &initial {
            if rho.dim() != self.dim {
                return Err(Error::Dimension(format!("initial state of dimension {}", rho.dim())));
            }
        }
        self.initial = initial;
        Ok(self)
    }

    /// Every symbol is a single Kraus operator.
    pub fn is_pure(&self) -> bool {
        self.operations.iter().all(|ops| ops.len() == 1)
    }

    fn symbol(&self, s: usize) -> Result<&[ComplexMatrix]> {
        self.operations
            .get(s)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::UnknownSymbol(format!("#{s}")))
    }

    /// `𝒦_s ρ` (unnormalized).
    pub fn apply(&self, s: usize, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        apply_kraus(self.symbol(s)?, rho)
    }

    /// Transfer matrix of `𝒦_s` alone.
    pub fn symbol_transfer(&self, s: usize) -> Result<ComplexMatrix> {
        let ops = self.symbol(s)?;
        if ops.is_empty() {
            return Ok(ComplexMatrix::zeros(self.dim * self.dim, self.dim * self.dim));
        }
        algebra::transfer_matrix(ops)
    }

    /// Transfer matrix of the channel `Σ_s 𝒦_s`.
    pub fn transfer_matrix(&self) -> Result<ComplexMatrix> {
        algebra::transfer_matrix(self.operations.iter().flatten())
    }

    /// `ρ* = Σ_s 𝒦_s ρ*`.
    pub fn steady_state(&self) -> Result<Stationary<DensityMatrix>> {
        algebra::fixed_point(&self.transfer_matrix()?)
    }

    /// `P(s) = tr[𝒦_s ρ]`, clamped to `[0, 1]`.
    pub fn symbol_probability(&self, s: usize, rho: &DensityMatrix) -> Result<f64> {
        let out = self.apply(s, rho.matrix())?;
        clamp_probability(out.trace().re)
    }

    /// `ρ_s = 𝒦_s ρ / P(s)`.
    pub fn conditional_update(&self, s: usize, rho: &DensityMatrix) -> Result<DensityMatrix> {
        let out = self.apply(s, rho.matrix())?;
        let p = out.trace().re;
        if p <= Tolerances::DEFAULT.impossible {
            return Err(Error::ImpossibleOutcome {
                symbol: self.alphabet.name(s).to_string(),
                probability: p,
            });
        }
        DensityMatrix::normalized(&out)
    }

    /// `tr[𝒦_{sₙ} ⋯ 𝒦_{s₁} ρ]`, from the given state, else the model's
    /// initial state, else the steady state.
    pub fn word_probability(&self, word: &[usize], initial: Option<&DensityMatrix>) -> Result<f64> {
        let start = initial_or_default(self, initial.map(|r| r.matrix().clone()))?;
        if start.rows() != self.dim {
            return Err(Error::Dimension(format!("initial state of dimension {}", start.rows())));
        }
        clamp_probability(self.raw_word_weight(word, &start)?)
    }

    /// The same probability as the Hilbert–Schmidt product
    /// `(𝕀| 𝓛_{sₙ} ⋯ 𝓛_{s₁} |ρ)` of vectorized superoperators.
    pub fn word_probability_superoperator(&self, word: &[usize], initial: Option<&DensityMatrix>) -> Result<f64> {
        let start = initial_or_default(self, initial.map(|r| r.matrix().clone()))?;
        let mut v = start.vectorize();
        for &s in word {
            v = self.symbol_transfer(s)?.apply_to_vector(&v)?;
        }
        // (𝕀|X) = tr X = Σᵢ vec(X)[i + i·d].
        let p: f64 = (0..self.dim).map(|i| v[i * (self.dim + 1)].re).sum();
        clamp_probability(p)
    }
}

fn clamp_probability(p: f64) -> Result<f64> {
    if p < -Tolerances::DEFAULT.negative_probability {
        return Err(Error::NegativeProbability(p));
    }
    Ok(p.clamp(0.0, 1.0))
}

impl Process for HqmmModel {
    type State = ComplexMatrix;

    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn default_state(&self) -> Result<ComplexMatrix> {
        match &self.initial {
            Some(rho) => Ok(rho.matrix().clone()),
            None => Ok(self.steady_state()?.state.into_matrix()),
        }
    }

    fn evolve(&self, symbol: usize, state: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.apply(symbol, state)
    }

    fn symbol_weight(&self, symbol: usize, state: &ComplexMatrix) -> Result<f64> {
        let e = self.effects.get(symbol).ok_or_else(|| Error::UnknownSymbol(format!("#{symbol}")))?;
        if state.shape() != (self.dim, self.dim) {
            return Err(Error::Dimension(format!("state {}x{} in a {}-dimensional model", state.rows(), state.cols(), self.dim)));
        }
        let d = self.dim;
        Ok((0..d).flat_map(|i| (0..d).map(move |j| (i, j))).map(|(i, j)| (e[(i, j)] * state[(j, i)]).re).sum())
    }

    fn weight(&self, state: &ComplexMatrix) -> f64 {
        state.trace().re
    }

    fn rescale(&self, state: &ComplexMatrix, factor: f64) -> ComplexMatrix {
        state.scale(factor)
    }
}
