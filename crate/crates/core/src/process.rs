//! Common interface of every generator: a hidden state evolved one symbol at a
//! time, whose total weight is the probability of the symbols emitted so far.

use crate::alphabet::Alphabet;
use crate::error::Result;

pub trait Process {
    /// Hidden state, possibly unnormalized.
    type State: Clone;

    fn alphabet(&self) -> &Alphabet;

    /// Hidden dimension.
    fn dim(&self) -> usize;

    /// The model's own initial state if it carries one, the stationary state
    /// otherwise.
    fn default_state(&self) -> Result<Self::State>;

    /// Unnormalized update `T_s π` or `𝒦_s ρ`.
    fn evolve(&self, symbol: usize, state: &Self::State) -> Result<Self::State>;

    /// `⟨1|π⟩` or `tr ρ`, without clamping.
    fn weight(&self, state: &Self::State) -> f64;

    fn rescale(&self, state: &Self::State, factor: f64) -> Self::State;

    /// `P(word)` from `state`, unclamped.
    fn raw_word_weight(&self, word: &[usize], state: &Self::State) -> Result<f64> {
        self.alphabet().check_word(word)?;
        let mut s = state.clone();
        for &sym in word {
            s = self.evolve(sym, &s)?;
        }
        Ok(self.weight(&s))
    }

    /// `weight(evolve(symbol, state))`, possibly without forming the
    /// updated state.
    fn symbol_weight(&self, symbol: usize, state: &Self::State) -> Result<f64> {
        Ok(self.weight(&self.evolve(symbol, state)?))
    }

    /// Probabilities of every next symbol from a normalized state.
    fn next_symbol_weights(&self, state: &Self::State) -> Result<Vec<(f64, Self::State)>> {
        (0..self.alphabet().len())
            .map(|s| {
                let next = self.evolve(s, state)?;
                Ok((self.weight(&next), next))
            })
            .collect()
    }
}

/// Resolves an explicit initial state, falling back to the model default.
pub(crate) fn initial_or_default<P: Process + ?Sized>(model: &P, initial: Option<P::State>) -> Result<P::State> {
    match initial {
        Some(s) => Ok(s),
        None => model.default_state(),
    }
}
