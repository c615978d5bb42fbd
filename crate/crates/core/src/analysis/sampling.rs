use crate::alphabet::Word;
use crate::error::{Error, Result};
use crate::process::{initial_or_default, Process};

use super::rng::Xorshift64Star;

/// Draws words by iterated conditional update from a fixed start state.
///
/// At each step the symbol weights are clamped at zero and renormalized, a
/// uniform `u` is drawn and the first symbol whose cumulative weight exceeds
/// `u · total` is emitted.
pub struct Sampler<'a, P: Process + ?Sized> {
    model: &'a P,
    start: P::State,
    rng: Xorshift64Star,
}

impl<'a, P: Process + ?Sized> Sampler<'a, P> {
    pub fn new(model: &'a P, seed: u64, initial: Option<P::State>) -> Result<Self> {
        let start = initial_or_default(model, initial)?;
        let w = model.weight(&start);
        if !(w > 0.0) {
            return Err(Error::NotDensityMatrix(format!("initial state has weight {w}")));
        }
        let start = model.rescale(&start, 1.0 / w);
        Ok(Self {
            model,
            start,
            rng: Xorshift64Star::new(seed),
        })
    }

    /// One word of the given length, independent of earlier draws except
    /// through the generator stream.
    pub fn word(&mut self, length: usize) -> Result<Word> {
        let mut state = self.start.clone();
        let mut out = Vec::with_capacity(length);
        for _ in 0..length {
            let weights = (0..self.model.alphabet().len())
                .map(|s| self.model.symbol_weight(s, &state))
                .collect::<Result<Vec<_>>>()?;
            let total: f64 = weights.iter().map(|p| p.max(0.0)).sum();
            if !(total > 0.0) {
                return Err(Error::NegativeProbability(total));
            }
            let target = self.rng.next_f64() * total;
            let mut acc = 0.0;
            let mut chosen = None;
            for (s, p) in weights.iter().enumerate() {
                if *p <= 0.0 {
                    continue;
                }
                acc += p;
                chosen = Some(s);
                if target < acc {
                    break;
                }
            }
            let s = chosen.expect("total weight is positive");
            let next = self.model.evolve(s, &state)?;
            let w = self.model.weight(&next);
            if !(w > 0.0) {
                return Err(Error::NegativeProbability(w));
            }
            state = self.model.rescale(&next, 1.0 / w);
            out.push(s);
        }
        Ok(out)
    }
}

pub fn sample_trajectory<P: Process + ?Sized>(
    model: &P,
    length: usize,
    seed: u64,
    initial: Option<P::State>,
) -> Result<Word> {
    Sampler::new(model, seed, initial)?.word(length)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::{cluster_kraus, MeasurementBasis};
    use crate::models;

    #[test]
    fn empty_trajectory() {
        assert!(sample_trajectory(&models::even_process(), 0, 1, None).unwrap().is_empty());
    }

    #[test]
    fn reproducible() {
        let m = models::four_state();
        let a = sample_trajectory(&m, 500, 9, None).unwrap();
        assert_eq!(a, sample_trajectory(&m, 500, 9, None).unwrap());
        assert_ne!(a, sample_trajectory(&m, 500, 10, None).unwrap());
    }

    #[test]
    fn even_process_never_emits_010() {
        let t = sample_trajectory(&models::even_process(), 100_000, 3, None).unwrap();
        assert!(!t.windows(3).any(|w| w == [0, 1, 0]));
        // Every maximal block of 1s between two 0s has even length.
        let zeros: Vec<usize> = t.iter().enumerate().filter(|(_, &s)| s == 0).map(|(i, _)| i).collect();
        assert!(zeros.windows(2).all(|z| (z[1] - z[0] - 1) % 2 == 0));
    }

    #[test]
    fn cluster_symbols_are_balanced() {
        let m = cluster_kraus(MeasurementBasis::new(std::f64::consts::FRAC_PI_4, 0.0));
        let t = sample_trajectory(&m, 100_000, 11, None).unwrap();
        let zeros = t.iter().filter(|&&s| s == 0).count() as f64 / t.len() as f64;
        assert!((zeros - 0.5).abs() < 0.01, "{zeros}");
    }
}
