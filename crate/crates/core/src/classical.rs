//! Stochastic finite-state generators (Mealy hidden Markov models).
//!
//! States are column vectors and transitions act by left multiplication:
//! `[T_s]ᵢⱼ = P(s; i | j)`, so every column of `Σ_s T_s` sums to one and
//! `P(s₁…sₙ) = ⟨1| T_{sₙ} ⋯ T_{s₁} |π⟩`.

use num_complex::Complex64;

use crate::algebra::{project_onto_fixed_space, ComplexMatrix, ProbVector, Stationary, Tolerances};
use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::process::{initial_or_default, Process};
use crate::validate::Diagnostics;

#[derive(Clone, Debug, PartialEq)]
pub struct HmmModel {
    alphabet: Alphabet,
    dim: usize,
    transitions: Vec<ComplexMatrix>,
    /// Real parts of `transitions`, row-major.
    real: Vec<Vec<f64>>,
    emission: Vec<Vec<f64>>,
    prior: Option<ProbVector>,
}

/// Location of a failed structural check: the symbol and the column (for
/// determinism) or row (for reversibility) holding more than one nonzero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Witness {
    pub symbol: usize,
    pub index: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Pass,
    Fail(Witness),
}

impl Check {
    pub fn passed(self) -> bool {
        self == Check::Pass
    }
}

impl HmmModel {
    /// Validated constructor.
    pub fn new(alphabet: Alphabet, transitions: Vec<ComplexMatrix>, prior: Option<ProbVector>) -> Result<Self> {
        let m = Self::from_parts(alphabet, transitions, prior)?;
        m.validate().into_result()?;
        Ok(m)
    }

    /// Convenience constructor from real row-major matrices over the numbered
    /// alphabet `0, 1, …`.
    pub fn from_real(transitions: &[&[&[f64]]]) -> Result<Self> {
        let mats = transitions
            .iter()
            .map(|rows| ComplexMatrix::from_real_rows(rows))
            .collect::<Result<Vec<_>>>()?;
        Self::new(Alphabet::numbered(mats.len()), mats, None)
    }

    /// Checks shapes only; use [`validate`](Self::validate) for the
    /// stochasticity conditions.
    pub fn from_parts(alphabet: Alphabet, transitions: Vec<ComplexMatrix>, prior: Option<ProbVector>) -> Result<Self> {
        if transitions.len() != alphabet.len() {
            return Err(Error::Dimension(format!(
                "{} transition matrices for {} symbols",
                transitions.len(),
                alphabet.len()
            )));
        }
        let dim = transitions[0].rows();
        for (s, t) in transitions.iter().enumerate() {
            if t.shape() != (dim, dim) {
                return Err(Error::Dimension(format!(
                    "T_{} is {}x{}, expected {dim}x{dim}",
                    alphabet.name(s),
                    t.rows(),
                    t.cols()
                )));
            }
        }
        if let Some(p) = &prior {
            if p.dim() != dim {
                return Err(Error::Dimension(format!("prior of length {} for {dim} states", p.dim())));
            }
        }
        let real = transitions.iter().map(|t| t.entries().iter().map(|z| z.re).collect()).collect();
        let emission = transitions
            .iter()
            .map(|t| (0..dim).map(|j| (0..dim).map(|i| t[(i, j)].re).sum()).collect())
            .collect();
        Ok(Self {
            alphabet,
            dim,
            transitions,
            real,
            emission,
            prior,
        })
    }

    /// All violated conditions: real entries in `[0, 1]`, substochastic
    /// columns per symbol, stochastic columns of `Σ_s T_s`.
    pub fn validate(&self) -> Diagnostics {
        let tol = Tolerances::DEFAULT;
        let mut diag = Diagnostics::new();
        let d = self.dim;
        for (s, t) in self.transitions.iter().enumerate() {
            let name = self.alphabet.name(s);
            for i in 0..d {
                for j in 0..d {
                    let z = t[(i, j)];
                    if z.im.abs() > tol.zero_entry {
                        diag.push(format!("T_{name}[{i}][{j}]"), format!("entry {z} is not real"));
                    }
                    if z.re < 0.0 || z.re > 1.0 {
                        diag.push(format!("T_{name}[{i}][{j}]"), format!("entry {} is outside [0, 1]", z.re));
                    }
                }
            }
            for j in 0..d {
                let col: f64 = (0..d).map(|i| t[(i, j)].re).sum();
                if col > 1.0 + tol.probability_sum {
                    diag.push(
                        format!("T_{name} column {j}"),
                        format!("sums to {col}, more than 1 (not substochastic)"),
                    );
                }
            }
        }
        for j in 0..d {
            let parts: Vec<f64> = self
                .real
                .iter()
                .map(|t| (0..d).map(|i| t[i * d + j]).sum())
                .collect();
            let total: f64 = parts.iter().sum();
            if (total - 1.0).abs() > tol.probability_sum {
                let detail = parts
                    .iter()
                    .enumerate()
                    .map(|(s, p)| format!("T_{} gives {p}", self.alphabet.name(s)))
                    .collect::<Vec<_>>()
                    .join(", ");
                diag.push(
                    format!("column {j} of sum over symbols"),
                    format!("sums to {total}, expected 1 ({detail})"),
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

    pub fn transitions(&self) -> &[ComplexMatrix] {
        &self.transitions
    }

    pub fn transition(&self, symbol: usize) -> &ComplexMatrix {
        &self.transitions[symbol]
    }

    /// Real value `[T_s]ᵢⱼ`.
    pub fn entry(&self, symbol: usize, i: usize, j: usize) -> f64 {
        self.real[symbol][i * self.dim + j]
    }

    pub fn prior(&self) -> Option<&ProbVector> {
        self.prior.as_ref()
    }

    pub fn with_prior(mut self, prior: Option<ProbVector>) -> Result<Self> {
        if let Some(p) = &prior {
            if p.dim() != self.dim {
                return Err(Error::Dimension(format!("prior of length {} for {} states", p.dim(), self.dim)));
            }
        }
        self.prior = prior;
        Ok(self)
    }

    /// `Σ_s T_s`.
    pub fn total_transition(&self) -> ComplexMatrix {
        let mut acc = ComplexMatrix::zeros(self.dim, self.dim);
        for t in &self.transitions {
            acc = &acc + t;
        }
        acc
    }

    /// Stationary distribution `π* = (Σ_s T_s) π*`.
    ///
    /// With several stationary distributions the uniform vector is projected
    /// onto the fixed space and `unique` is false.
    pub fn steady_state(&self) -> Result<Stationary<ProbVector>> {
        let start = vec![Complex64::new(1.0 / self.dim as f64, 0.0); self.dim];
        let (v, kernel) = project_onto_fixed_space(&self.total_transition(), &start, Tolerances::DEFAULT.fixed_point)?;
        let mut p: Vec<f64> = v.iter().map(|z| z.re.max(0.0)).collect();
        let s: f64 = p.iter().sum();
        p.iter_mut().for_each(|x| *x /= s);
        Ok(Stationary {
            state: ProbVector::new(p)?,
            unique: kernel == 1,
        })
    }

    /// `T_s π` for a (possibly unnormalized) distribution.
    pub fn step(&self, symbol: usize, p: &[f64]) -> Vec<f64> {
        let d = self.dim;
        let t = &self.real[symbol];
        (0..d).map(|i| (0..d).map(|j| t[i * d + j] * p[j]).sum()).collect()
    }

    /// `⟨1| T_{sₙ} ⋯ T_{s₁} |π⟩`, with `π` the given initial distribution, else
    /// the prior, else the steady state.
    pub fn word_probability(&self, word: &[usize], initial: Option<&ProbVector>) -> Result<f64> {
        let start = initial_or_default(self, initial.map(|p| p.entries().to_vec()))?;
        if start.len() != self.dim {
            return Err(Error::Dimension(format!("initial distribution of length {}", start.len())));
        }
        Ok(self.raw_word_weight(word, &start)?.clamp(0.0, 1.0))
    }

    /// Every column of every `T_s` has at most one nonzero entry.
    pub fn is_deterministic(&self) -> Check {
        let zero = Tolerances::DEFAULT.zero_entry;
        let d = self.dim;
        for s in 0..self.alphabet.len() {
            for j in 0..d {
                if (0..d).filter(|&i| self.entry(s, i, j).abs() > zero).count() > 1 {
                    return Check::Fail(Witness { symbol: s, index: j });
                }
            }
        }
        Check::Pass
    }

    /// A deterministic generator whose `T_s` also have at most one nonzero per
    /// row, i.e. `I_j(s) = I_j'(s) ⇔ j = j'`.
    pub fn is_reversible(&self) -> Result<Check> {
        if let Check::Fail(w) = self.is_deterministic() {
            return Err(Error::NotDeterministic {
                symbol: self.alphabet.name(w.symbol).to_string(),
                column: w.index,
            });
        }
        let zero = Tolerances::DEFAULT.zero_entry;
        let d = self.dim;
        for s in 0..self.alphabet.len() {
            for i in 0..d {
                if (0..d).filter(|&j| self.entry(s, i, j).abs() > zero).count() > 1 {
                    return Ok(Check::Fail(Witness { symbol: s, index: i }));
                }
            }
        }
        Ok(Check::Pass)
    }

    /// `(I_j(s), P(s|j))` for a deterministic generator: the unique successor
    /// of state `j` under `s` and its probability, or `None` when `s` cannot
    /// be emitted from `j`.
    pub fn successor(&self, symbol: usize, j: usize) -> Option<(usize, f64)> {
        let zero = Tolerances::DEFAULT.zero_entry;
        (0..self.dim)
            .map(|i| (i, self.entry(symbol, i, j)))
            .find(|&(_, p)| p.abs() > zero)
    }
}

impl Process for HmmModel {
    type State = Vec<f64>;

    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn default_state(&self) -> Result<Vec<f64>> {
        match &self.prior {
            Some(p) => Ok(p.entries().to_vec()),
            None => Ok(self.steady_state()?.state.entries().to_vec()),
        }
    }

    fn evolve(&self, symbol: usize, state: &Vec<f64>) -> Result<Vec<f64>> {
        if symbol >= self.alphabet.len() {
            return Err(Error::UnknownSymbol(format!("#{symbol}")));
        }
        Ok(self.step(symbol, state))
    }

    fn symbol_weight(&self, symbol: usize, state: &Vec<f64>) -> Result<f64> {
        let e = self.emission.get(symbol).ok_or_else(|| Error::UnknownSymbol(format!("#{symbol}")))?;
        Ok(e.iter().zip(state).map(|(a, b)| a * b).sum())
    }

    fn weight(&self, state: &Vec<f64>) -> f64 {
        state.iter().sum()
    }

    fn rescale(&self, state: &Vec<f64>, factor: f64) -> Vec<f64> {
        state.iter().map(|x| x * factor).collect()
    }
}
