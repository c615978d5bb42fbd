//! Non-adaptive readout of a 1D cluster state.
//!
//! Each qubit is measured in the basis
//! `|ε₀⟩ = cos φ |0⟩ + e^{iξ} sin φ |1⟩`, `|ε₁⟩ = sin φ |0⟩ − e^{iξ} cos φ |1⟩`.
//! The readout is an HQMM on one qubit with
//! `K_s = (|0⟩⟨ε_s| + |1⟩⟨ε_s| Z) / √2`; [`ClusterOracle`] computes the same
//! statistics by brute force on the full `N`-qubit state vector.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;

use crate::algebra::ComplexMatrix;
use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::quantum::HqmmModel;

/// Largest chain the brute-force oracle will build.
pub const MAX_ORACLE_QUBITS: usize = 14;

/// Measurement angles, stored in the canonical range `φ ∈ [0, π)`,
/// `ξ ∈ [0, 2π)`. Shifting `φ` by `π` only flips the sign of both basis
/// vectors, so the projectors are unchanged.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasurementBasis {
    phi: f64,
    xi: f64,
}

impl MeasurementBasis {
    /// Panics on non-finite angles; see [`try_new`](Self::try_new).
    pub fn new(phi: f64, xi: f64) -> Self {
        Self::try_new(phi, xi).expect("measurement angles must be finite")
    }

    pub fn try_new(phi: f64, xi: f64) -> Result<Self> {
        if !phi.is_finite() || !xi.is_finite() {
            return Err(Error::OutOfRange(format!("non-finite angles φ={phi}, ξ={xi}")));
        }
        Ok(Self {
            phi: phi.rem_euclid(PI),
            xi: xi.rem_euclid(2.0 * PI),
        })
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn xi(&self) -> f64 {
        self.xi
    }

    /// Amplitudes of `|ε_s⟩` in the computational basis.
    pub fn vector(&self, s: usize) -> [Complex64; 2] {
        let (sin, cos) = self.phi.sin_cos();
        let phase = Complex64::from_polar(1.0, self.xi);
        match s {
            0 => [Complex64::new(cos, 0.0), phase * sin],
            1 => [Complex64::new(sin, 0.0), -phase * cos],
            _ => panic!("binary outcome expected, got {s}"),
        }
    }

    /// `|ε_s⟩⟨ε_s|`.
    pub fn projector(&self, s: usize) -> ComplexMatrix {
        let v = self.vector(s);
        ComplexMatrix::outer(&v, &v)
    }

    /// `cos ξ (sin 2φ + sin 6φ) / 32`, the excess probability of each
    /// even-parity length-3 word in the stationary process.
    pub fn parity_bias(&self) -> f64 {
        self.xi.cos() * ((2.0 * self.phi).sin() + (6.0 * self.phi).sin()) / 32.0
    }
}

/// The readout HQMM: two symbols, one Kraus operator each, no fixed initial
/// state (the stationary state is `𝕀/2`; the chain's first qubit starts in
/// `|+⟩`).
pub fn cluster_kraus(basis: MeasurementBasis) -> HqmmModel {
    let ops = (0..2)
        .map(|s| {
            let e = basis.vector(s);
            // Row 0 is ⟨ε_s|, row 1 is ⟨ε_s|Z.
            let k = ComplexMatrix::from_rows(&[
                vec![e[0].conj() * FRAC_1_SQRT_2, e[1].conj() * FRAC_1_SQRT_2],
                vec![e[0].conj() * FRAC_1_SQRT_2, -e[1].conj() * FRAC_1_SQRT_2],
            ])
            .expect("2x2");
            vec![k]
        })
        .collect();
    HqmmModel::new(Alphabet::numbered(2), 2, ops, None).expect("cluster operations are complete")
}

/// State vector of an `N`-qubit 1D cluster state. Qubit 1 (the first one
/// measured) is the least significant bit of the amplitude index.
#[derive(Clone, Debug, PartialEq)]
pub struct ClusterOracle {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

/// `U_{N,N−1} ⋯ U_{2,1} |+⟩^{⊗N}` with controlled-phase gates between
/// neighbours.
pub fn build_cluster(n: usize) -> Result<ClusterOracle> {
    if !(2..=MAX_ORACLE_QUBITS).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "cluster oracle supports 2..={MAX_ORACLE_QUBITS} qubits, got {n}"
        )));
    }
    let dim = 1usize << n;
    let amp = Complex64::new((dim as f64).sqrt().recip(), 0.0);
    let mut state = vec![amp; dim];
    for q in 0..n - 1 {
        let pair = (1usize << q) | (1usize << (q + 1));
        for (x, a) in state.iter_mut().enumerate() {
            if x & pair == pair {
                *a = -*a;
            }
        }
    }
    Ok(ClusterOracle { n_qubits: n, amplitudes: state })
}

impl ClusterOracle {
    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `‖P_{sₙ} ⋯ P_{s₁} |cluster_N⟩‖²`, measuring qubits `1..=n` in order.
    pub fn word_probability(&self, basis: MeasurementBasis, word: &[usize]) -> Result<f64> {
        if word.len() > self.n_qubits {
            return Err(Error::OutOfRange(format!(
                "word of length {} on a {}-qubit chain",
                word.len(),
                self.n_qubits
            )));
        }
        if let Some(&s) = word.iter().find(|&&s| s > 1) {
            return Err(Error::UnknownSymbol(format!("#{s}")));
        }
        // Projecting onto |ε⟩ has the same norm as contracting with ⟨ε|, so
        // each measured qubit is contracted away.
        let mut v = self.amplitudes.clone();
        for &s in word {
            let e = basis.vector(s);
            let (e0, e1) = (e[0].conj(), e[1].conj());
            v = (0..v.len() / 2).map(|y| e0 * v[2 * y] + e1 * v[2 * y + 1]).collect();
        }
        Ok(v.iter().map(|a| a.norm_sqr()).sum())
    }
}

/// Free-function form of [`ClusterOracle::word_probability`].
pub fn oracle_word_probability(oracle: &ClusterOracle, basis: MeasurementBasis, word: &[usize]) -> Result<f64> {
    oracle.word_probability(basis, word)
}

/// Stationary length-3 word probabilities, indexed by `4·s₁ + 2·s₂ + s₃`:
/// `1/8 + b` for an even number of ones, `1/8 − b` otherwise, with `b` the
/// [parity bias](MeasurementBasis::parity_bias).
pub fn length3_closed_form(basis: MeasurementBasis) -> [f64; 8] {
    let b = basis.parity_bias();
    std::array::from_fn(|w| {
        if (w as u32).count_ones() % 2 == 0 {
            0.125 + b
        } else {
            0.125 - b
        }
    })
}

/// Closed-form length-3 block entropy in bits:
/// `5 − ½ log(16 − c²S²) + ½ c cos²2φ sin 2φ · log(8/(4 + cS) − 1)`,
/// with `c = cos ξ`, `S = sin 2φ + sin 6φ`.
pub fn h3_closed_form(basis: MeasurementBasis) -> f64 {
    let (phi, xi) = (basis.phi, basis.xi);
    let c = xi.cos();
    let s = (2.0 * phi).sin() + (6.0 * phi).sin();
    let cos2 = (2.0 * phi).cos();
    5.0 - 0.5 * (16.0 - c * c * s * s).log2()
        + 0.5 * c * cos2 * cos2 * (2.0 * phi).sin() * (8.0 / (4.0 + c * s) - 1.0).log2()
}
