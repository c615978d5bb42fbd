use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("non-finite matrix entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("not a density matrix: {0}")]
    NotDensityMatrix(String),

    #[error("not a probability vector: {0}")]
    NotProbVector(String),

    #[error("no eigenvalue within {tolerance:e} of 1 (smallest |L - I| singular value {gap:e}); map is not trace preserving")]
    NoFixedPoint { gap: f64, tolerance: f64 },

    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),

    #[error("invalid alphabet: {0}")]
    Alphabet(String),

    #[error("outcome {symbol:?} is impossible from this state (probability {probability:e})")]
    ImpossibleOutcome { symbol: String, probability: f64 },

    #[error("negative probability {0:e}; model is invalid")]
    NegativeProbability(f64),

    #[error("invalid model:\n{0}")]
    Invalid(crate::validate::Diagnostics),

    #[error("model is not deterministic: symbol {symbol:?} column {column} has several successors")]
    NotDeterministic { symbol: String, column: usize },

    #[error("model is not reversible: symbol {symbol:?} row {row} has several predecessors")]
    NotReversible { symbol: String, row: usize },

    #[error("{0}")]
    Construction(String),

    #[error("{0}")]
    OutOfRange(String),

    #[error("model file: {0}")]
    Format(String),
}
