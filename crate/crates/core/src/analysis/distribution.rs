use crate::algebra::Tolerances;
use crate::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};
use crate::process::{initial_or_default, Process};

/// Largest number of words [`enumerate_distribution`] will produce.
pub const ENUMERATION_BUDGET: usize = 10_000_000;

/// Probabilities of all `|A|^n` words of one length, in lexicographic order.
#[derive(Clone, Debug, PartialEq)]
pub struct WordDistribution {
    length: usize,
    alphabet: Alphabet,
    probabilities: Vec<f64>,
}

impl WordDistribution {
    /// Wraps lexicographically ordered probabilities; checks the count and
    /// normalization.
    pub fn new(alphabet: Alphabet, length: usize, probabilities: Vec<f64>) -> Result<Self> {
        let expected = alphabet.len().pow(length as u32);
        if probabilities.len() != expected {
            return Err(Error::Dimension(format!(
                "{} probabilities for {expected} words",
                probabilities.len()
            )));
        }
        let total: f64 = probabilities.iter().sum();
        if (total - 1.0).abs() > 1e-10 || probabilities.iter().any(|p| *p < 0.0) {
            return Err(Error::NotProbVector(format!("word probabilities sum to {total}")));
        }
        Ok(Self {
            length,
            alphabet,
            probabilities,
        })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    fn index(&self, word: &[usize]) -> Option<usize> {
        if word.len() != self.length {
            return None;
        }
        let k = self.alphabet.len();
        word.iter().try_fold(0usize, |acc, &s| (s < k).then_some(acc * k + s))
    }

    pub fn get(&self, word: &[usize]) -> Option<f64> {
        self.index(word).map(|i| self.probabilities[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (Word, f64)> + '_ {
        self.alphabet.words(self.length).zip(self.probabilities.iter().copied())
    }

    pub fn total(&self) -> f64 {
        self.probabilities.iter().sum()
    }

    /// Length `n − 1` distribution obtained by summing over the last symbol.
    pub fn marginalize_last(&self) -> Option<WordDistribution> {
        if self.length == 0 {
            return None;
        }
        let k = self.alphabet.len();
        let probabilities = self.probabilities.chunks(k).map(|c| c.iter().sum()).collect();
        Some(WordDistribution {
            length: self.length - 1,
            alphabet: self.alphabet.clone(),
            probabilities,
        })
    }

    /// Length `n − 1` distribution obtained by summing over the first symbol.
    pub fn marginalize_first(&self) -> Option<WordDistribution> {
        if self.length == 0 {
            return None;
        }
        let stride = self.probabilities.len() / self.alphabet.len();
        let probabilities = (0..stride)
            .map(|i| self.probabilities.iter().skip(i).step_by(stride).sum())
            .collect();
        Some(WordDistribution {
            length: self.length - 1,
            alphabet: self.alphabet.clone(),
            probabilities,
        })
    }
}

/// The complete length-`n` distribution, evaluated over a prefix tree so that
/// each tree node costs one application of a symbol's operation.
pub fn enumerate_distribution<P: Process + ?Sized>(
    model: &P,
    n: usize,
    initial: Option<P::State>,
) -> Result<WordDistribution> {
    let k = model.alphabet().len();
    let count = k.checked_pow(n as u32).filter(|&c| c <= ENUMERATION_BUDGET);
    let Some(count) = count else {
        return Err(Error::OutOfRange(format!(
            "{k}^{n} words exceed the enumeration budget of {ENUMERATION_BUDGET}"
        )));
    };
    let start = initial_or_default(model, initial)?;
    let mut probabilities = Vec::with_capacity(count);
    // Depth-first walk; the stack holds (depth, state) and children are pushed
    // in reverse so leaves come out in lexicographic order.
    let mut stack = vec![(0usize, start)];
    while let Some((depth, state)) = stack.pop() {
        if depth == n {
            probabilities.push(clamp(model.weight(&state))?);
            continue;
        }
        for s in (0..k).rev() {
            stack.push((depth + 1, model.evolve(s, &state)?));
        }
    }
    WordDistribution::new(model.alphabet().clone(), n, probabilities)
}

pub(crate) fn clamp(p: f64) -> Result<f64> {
    if p < -Tolerances::DEFAULT.negative_probability {
        return Err(Error::NegativeProbability(p));
    }
    Ok(p.clamp(0.0, 1.0))
}

/// Shannon entropy in bits, `0 · log 0 = 0`.
pub fn block_entropy(dist: &WordDistribution) -> f64 {
    dist.probabilities
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.log2())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models;

    #[test]
    fn empty_word_has_unit_probability() {
        let d = enumerate_distribution(&models::even_process(), 0, None).unwrap();
        assert_eq!(d.probabilities(), &[1.0]);
        assert_eq!(d.get(&[]), Some(1.0));
    }

    #[test]
    fn even_process_length_three() {
        let m = models::even_process();
        let d = enumerate_distribution(&m, 3, None).unwrap();
        assert_eq!(d.get(&[0, 1, 0]), Some(0.0));
        for (w, p) in d.iter() {
            let direct = m.word_probability(&w, None).unwrap();
            assert!((p - direct).abs() < 1e-15, "{w:?}");
        }
        assert!((d.total() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn budget_is_enforced() {
        let m = models::four_state();
        assert!(matches!(enumerate_distribution(&m, 12, None), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn entropy_edge_cases() {
        let a = Alphabet::numbered(2);
        let uniform = WordDistribution::new(a.clone(), 3, vec![0.125; 8]).unwrap();
        assert_eq!(block_entropy(&uniform), 3.0);
        let mut p = vec![0.0; 8];
        p[5] = 1.0;
        assert_eq!(block_entropy(&WordDistribution::new(a, 3, p).unwrap()), 0.0);
        for k in 1..=10usize {
            let d = WordDistribution::new(Alphabet::numbered(k), 1, vec![1.0 / k as f64; k]).unwrap();
            assert!((block_entropy(&d) - (k as f64).log2()).abs() < 1e-15);
        }
    }

    #[test]
    fn marginals() {
        let d = enumerate_distribution(&models::four_state(), 3, None).unwrap();
        let shorter = enumerate_distribution(&models::four_state(), 2, None).unwrap();
        for m in [d.marginalize_last().unwrap(), d.marginalize_first().unwrap()] {
            for (a, b) in m.probabilities().iter().zip(shorter.probabilities()) {
                assert!((a - b).abs() < 1e-15);
            }
        }
    }
}
