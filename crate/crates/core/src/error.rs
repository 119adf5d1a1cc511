use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("witness parse error on line {line}: {message}")]
    WitnessParse { line: usize, message: String },

    /// Parameters outside the regime an operation is defined for.
    #[error("parameters out of range: {0}")]
    OutOfRegime(String),

    /// A parameter combination the underlying result explicitly excludes.
    #[error("excluded case: {0}")]
    ExcludedCase(String),

    #[error("infeasible parameters: {0}")]
    Infeasible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
