use thiserror::Error;

/// Errors produced by constructors, solvers and I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("construction error: {0}")]
    Construction(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The stopping-rule estimator hit its draw cap before the stopping
    /// condition; signals a mean at or near zero.
    #[error("sample cap exceeded after {draws} draws")]
    SampleCapExceeded { draws: u64 },

    /// An exact solver was asked for an instance above its enumeration bound.
    #[error("size bound exceeded: {0}")]
    SizeBound(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors that indicate bad input rather than I/O failure.
    pub fn is_precondition(&self) -> bool {
        !matches!(self, Error::Io(_) | Error::Parse(_))
    }
}
