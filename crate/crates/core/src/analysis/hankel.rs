//! Finite blocks of the Hankel matrix of word probabilities.
//!
//! Entry `(u, v)` is `P(v·u)`: the column word `v` is emitted first and the
//! row word `u` second, which makes the block factor as
//! `[⟨1|T_u]_u · [T_v|π⟩]_v` through the hidden space. Its rank therefore
//! bounds from below the number of states of any classical generator of the
//! process.

use crate::algebra::{numerical_rank, ComplexMatrix};
use crate::alphabet::{Alphabet, Word};
use crate::error::Result;
use crate::process::{initial_or_default, Process};

use super::distribution::clamp;

#[derive(Clone, Debug, PartialEq)]
pub struct HankelBlock {
    pub row_words: Vec<Word>,
    pub col_words: Vec<Word>,
    /// Real-valued, `row_words.len() × col_words.len()`.
    pub matrix: ComplexMatrix,
}

impl HankelBlock {
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.matrix[(row, col)].re
    }

    pub fn rank(&self, tol: Option<f64>) -> usize {
        numerical_rank(&self.matrix, tol)
    }
}

/// `{ε} ∪ A`: the empty word followed by every single symbol.
pub fn default_hankel_words(alphabet: &Alphabet) -> Vec<Word> {
    alphabet.words_up_to(1)
}

pub fn hankel_block<P: Process + ?Sized>(
    model: &P,
    row_words: &[Word],
    col_words: &[Word],
    initial: Option<P::State>,
) -> Result<HankelBlock> {
    for w in row_words.iter().chain(col_words) {
        model.alphabet().check_word(w)?;
    }
    let start = initial_or_default(model, initial)?;
    let mut matrix = ComplexMatrix::zeros(row_words.len(), col_words.len());
    for (c, v) in col_words.iter().enumerate() {
        let mut after_v = start.clone();
        for &s in v {
            after_v = model.evolve(s, &after_v)?;
        }
        for (r, u) in row_words.iter().enumerate() {
            let p = model.raw_word_weight(u, &after_v)?;
            matrix[(r, c)] = num_complex::Complex64::new(clamp(p)?, 0.0);
        }
    }
    Ok(HankelBlock {
        row_words: row_words.to_vec(),
        col_words: col_words.to_vec(),
        matrix,
    })
}

/// Numerical rank of the Hankel block: a lower bound on the number of hidden
/// states of any classical generator of the process.
pub fn state_count_lower_bound<P: Process + ?Sized>(
    model: &P,
    row_words: &[Word],
    col_words: &[Word],
    tol: Option<f64>,
) -> Result<usize> {
    Ok(hankel_block(model, row_words, col_words, None)?.rank(tol))
}
