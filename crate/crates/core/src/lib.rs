//! Classical hidden Markov models and hidden quantum Markov models over finite
//! alphabets, the constructions relating them, sequential readout of the 1D
//! cluster state and of matrix product states, and Hankel rank bounds.
//!
//! ```
//! use hqmm::{quantum::embed_classical, Alphabet, HmmModel};
//!
//! let even = HmmModel::from_real(&[
//!     &[&[0.5, 0.0], &[0.0, 0.0]],
//!     &[&[0.0, 1.0], &[0.5, 0.0]],
//! ])?;
//! assert_eq!(even.word_probability(&[0, 1, 0], None)?, 0.0);
//!
//! let q = embed_classical(&even)?;
//! let w = Alphabet::numbered(2).parse_word("0110")?;
//! assert!((q.word_probability(&w, None)? - even.word_probability(&w, None)?).abs() < 1e-12);
//! # Ok::<(), hqmm::Error>(())
//! ```

pub mod algebra;
pub mod alphabet;
pub mod analysis;
pub mod classical;
pub mod cluster;
mod error;
pub mod mps;
mod process;
pub mod quantum;
pub mod validate;

#[cfg(test)]
mod models;

pub use algebra::{ComplexMatrix, DensityMatrix, ProbVector, Stationary, Tolerances};
pub use alphabet::{Alphabet, Word};
pub use classical::HmmModel;
pub use error::{Error, Result};
pub use mps::MpsModel;
pub use process::Process;
pub use quantum::HqmmModel;
