use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid permutation word {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("invalid composition {0:?}: parts must be positive")]
    InvalidComposition(Vec<usize>),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("composition {coarse:?} does not coarsen {fine:?}")]
    NotCoarsening { fine: Vec<usize>, coarse: Vec<usize> },

    #[error("generator index {index} out of range for degree {n}")]
    GeneratorOutOfRange { index: usize, n: usize },

    #[error("degree {n} exceeds the configured bound {bound}")]
    BoundExceeded { n: usize, bound: usize },

    #[error("completion of {partition:?} to {n} is not defined")]
    CompletionUndefined { partition: Vec<usize>, n: usize },

    #[error("interpolation failed: {0}")]
    Interpolation(String),

    #[error("coefficient is not a Laurent polynomial: {0}")]
    NotLaurent(String),

    #[error("(q-1)-power cancellation failed: {0}")]
    Cancellation(String),

    #[error("target is not in the span of the basis")]
    NotInSpan,

    #[error("basis matrix is singular")]
    Singular,

    #[error("support violation: {0}")]
    SupportViolation(String),

    #[error("structure constants did not stabilize: {0}")]
    NonStabilization(String),

    #[error("cross-check failed: {0}")]
    CrossCheck(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
