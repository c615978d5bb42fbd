//! Dense complex linear algebra and density-operator primitives.

mod channel;
mod decomp;
mod matrix;
mod projective;
mod state;
mod tolerance;

pub use channel::{apply_kraus, apply_transfer, effect, fixed_point, fixed_point_with, transfer_matrix, Stationary};
pub use decomp::{numerical_rank, singular_values};
pub(crate) use decomp::project_onto_fixed_space;
pub(crate) use projective::projective_defects;
pub(crate) use state::max_off_diagonal;
pub use matrix::{matmul, ComplexMatrix};
pub use state::{DensityMatrix, ProbVector};
pub use tolerance::Tolerances;

pub use num_complex::Complex64;
