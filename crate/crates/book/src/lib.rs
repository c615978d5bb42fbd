//! Runs the code in the guide under `book/` as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/classical.md")]
pub mod classical {}

#[doc = include_str!("../../../book/src/quantum.md")]
pub mod quantum {}

#[doc = include_str!("../../../book/src/cluster.md")]
pub mod cluster {}

#[doc = include_str!("../../../book/src/mps.md")]
pub mod mps {}

#[doc = include_str!("../../../book/src/analysis.md")]
pub mod analysis {}

#[doc = include_str!("../../../book/src/model-files.md")]
pub mod model_files {}

#[doc = include_str!("../../../README.md")]
pub mod readme {}
