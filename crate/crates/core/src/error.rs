use thiserror::Error;

/// Errors produced by the analysis pipeline.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("vertex `{0}` has no vector label")]
    MissingLabel(String),

    #[error("zero vector has no direction")]
    ZeroVector,

    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),

    #[error("invalid tolerances: zero tolerance {tol_zero:e} must be below margin {tol_margin:e}")]
    InvalidTolerance { tol_zero: f64, tol_margin: f64 },

    #[error("partition violated on context {context}: {message}")]
    PartitionViolation { context: String, message: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("pair ({0}, {1}) is not contained in a common context")]
    PairNotCoContextual(String, String),

    #[error("{0}")]
    Unsupported(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
