//! Constructors that turn projective generators and classical generators into
//! HQMMs.

use num_complex::Complex64;

use super::HqmmModel;
use crate::algebra::{max_off_diagonal, projective_defects, ComplexMatrix, DensityMatrix, Tolerances};
use crate::alphabet::{Alphabet, Word};
use crate::classical::{Check, HmmModel};
use crate::error::{Error, Result};
use crate::process::{initial_or_default, Process};

/// Von Neumann generator: one Kraus operator `P_s U` per symbol.
///
/// The projectors must be Hermitian, idempotent, pairwise orthogonal and sum
/// to the identity; `U` must be unitary.
pub fn vn_generator(projectors: &[ComplexMatrix], unitary: &ComplexMatrix, alphabet: Alphabet) -> Result<HqmmModel> {
    let tol = Tolerances::DEFAULT.operator;
    let d = unitary.rows();
    if !unitary.is_square() {
        return Err(Error::Construction(format!("unitary is {}x{}", unitary.rows(), unitary.cols())));
    }
    let id = ComplexMatrix::identity(d);
    let unitarity = unitary.adjoint().matmul(unitary)?.max_abs_diff(&id);
    if unitarity > tol {
        return Err(Error::Construction(format!("U is not unitary: ‖U†U − 𝕀‖ = {unitarity:e}")));
    }
    if let Some((loc, msg)) = projective_defects(projectors, &alphabet, d, tol).into_iter().next() {
        return Err(Error::Construction(format!("{loc} {msg}")));
    }
    let ops = projectors
        .iter()
        .map(|p| Ok(vec![p.matmul(unitary)?]))
        .collect::<Result<Vec<_>>>()?;
    HqmmModel::new(alphabet, d, ops, None)
}

/// Embeds a classical generator with the same number of states:
/// `K_s^{i,j} = √[T_s]ᵢⱼ |i⟩⟨j|` for every nonzero entry.
///
/// A prior, if present, becomes the diagonal initial state.
pub fn embed_classical(m: &HmmModel) -> Result<HqmmModel> {
    let d = m.dim();
    let zero = Tolerances::DEFAULT.zero_entry;
    let mut ops = Vec::with_capacity(m.alphabet().len());
    for s in 0..m.alphabet().len() {
        let mut kraus = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let t = m.entry(s, i, j);
                if t < 0.0 {
                    return Err(Error::Construction(format!(
                        "negative transition probability {t} at T_{}[{i}][{j}]",
                        m.alphabet().name(s)
                    )));
                }
                if t > zero {
                    let mut k = ComplexMatrix::zeros(d, d);
                    k[(i, j)] = Complex64::new(t.sqrt(), 0.0);
                    kraus.push(k);
                }
            }
        }
        ops.push(kraus);
    }
    let initial = m.prior().map(DensityMatrix::diagonal);
    HqmmModel::new(m.alphabet().clone(), d, ops, initial)
}

/// Pure-operation HQMM of a reversible generator:
/// `K_s = Σⱼ √P(s|j) |I_j(s)⟩⟨j|`.
pub fn pure_from_reversible(m: &HmmModel) -> Result<HqmmModel> {
    if let Check::Fail(w) = m.is_reversible()? {
        return Err(Error::NotReversible {
            symbol: m.alphabet().name(w.symbol).to_string(),
            row: w.index,
        });
    }
    let d = m.dim();
    let ops = (0..m.alphabet().len())
        .map(|s| {
            let mut k = ComplexMatrix::zeros(d, d);
            for j in 0..d {
                if let Some((i, p)) = m.successor(s, j) {
                    k[(i, j)] = Complex64::new(p.sqrt(), 0.0);
                }
            }
            vec![k]
        })
        .collect();
    let initial = m.prior().map(DensityMatrix::diagonal);
    HqmmModel::new(m.alphabet().clone(), d, ops, initial)
}

/// Largest off-diagonal magnitude `|⟨i|ρ_w|j⟩|`, `i ≠ j`, over the normalized
/// conditional states reached along every prefix of every given word.
///
/// Prefixes of zero probability are skipped. For embedded classical models
/// this is zero from any initial state.
pub fn coherence_check(m: &HqmmModel, words: &[Word], initial: Option<&DensityMatrix>) -> Result<f64> {
    let start = initial_or_default(m, initial.map(|r| r.matrix().clone()))?;
    let mut worst = 0.0f64;
    for w in words {
        m.alphabet().check_word(w)?;
        let mut rho = start.clone();
        for &s in w {
            rho = m.evolve(s, &rho)?;
            let p = m.weight(&rho);
            if p <= Tolerances::DEFAULT.impossible {
                break;
            }
            worst = worst.max(max_off_diagonal(&rho) / p);
        }
    }
    Ok(worst)
}
