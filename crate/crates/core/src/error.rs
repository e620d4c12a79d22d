use thiserror::Error;

/// Errors surfaced by the pricing pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("invalid payoff: {0}")]
    InvalidPayoff(String),

    #[error("invalid basis: {0}")]
    InvalidBasis(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("exercise date {0} is not a grid point")]
    ExerciseDateOffGrid(f64),

    #[error("empty exercise set")]
    EmptyExerciseSet,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("non-finite objective (value {value}) at beta = {beta:?}")]
    NonFinite { value: f64, beta: Vec<f64> },
}

pub type Result<T> = std::result::Result<T, Error>;
