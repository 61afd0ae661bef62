use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed interval `{0}`")]
    MalformedInterval(String),

    #[error("inverted bounds: left {left} > right {right}")]
    InvertedBounds { left: f64, right: f64 },

    #[error("non-finite interval bound")]
    NonFinite,

    #[error("invalid scale: min {min} must be finite and below max {max}")]
    InvalidScale { min: f64, max: f64 },

    #[error("interval [{left}, {right}] lies outside scale [{min}, {max}]")]
    OutOfScale {
        left: f64,
        right: f64,
        min: f64,
        max: f64,
    },

    #[error("interval set `{0}` has no sources")]
    ZeroSources(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}:{line}: {message}")]
    MalformedRow {
        path: PathBuf,
        line: usize,
        message: String,
    },

    /// Validation failure tied to a specific input row.
    #[error("{path}:{line}: {source}")]
    InvalidRow {
        path: PathBuf,
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("{0}: dataset has no rows")]
    EmptyDataset(PathBuf),

    #[error("alternative `{alternative}` has no data for criterion `{criterion}`")]
    MissingCell {
        alternative: String,
        criterion: String,
    },

    #[error("duplicate source `{source_label}` in cell ({alternative}, {criterion})")]
    DuplicateSource {
        alternative: String,
        criterion: String,
        source_label: String,
    },

    #[error("unknown {kind} `{label}`")]
    UnknownLabel { kind: &'static str, label: String },

    #[error("fuzzy numbers are defined on different scales")]
    ScaleMismatch,

    #[error("similarity weights must have unit squared norm (got {0})")]
    InvalidWeights(f64),

    #[error("no evaluation points with positive membership")]
    EmptyEvaluation,

    #[error("ideal ratio undefined for `{label}`: similarity to both ideals is zero")]
    DivisionByZero { label: String },

    #[error("{0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn at_row(self, path: &std::path::Path, line: usize) -> Error {
        Error::InvalidRow {
            path: path.to_path_buf(),
            line,
            source: Box::new(self),
        }
    }
}
