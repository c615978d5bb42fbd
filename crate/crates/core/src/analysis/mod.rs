//! Word distributions, block entropy, Hankel blocks and sampling, generic over
//! [`Process`](crate::Process).

mod distribution;
mod hankel;
mod rng;
mod sampling;

pub use distribution::{block_entropy, enumerate_distribution, WordDistribution, ENUMERATION_BUDGET};
pub use hankel::{default_hankel_words, hankel_block, state_count_lower_bound, HankelBlock};
pub use rng::Xorshift64Star;
pub use sampling::{sample_trajectory, Sampler};
