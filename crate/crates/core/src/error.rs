use thiserror::Error;

/// Errors raised by the arithmetic kernels.
///
/// The variants map one-to-one onto the CLI exit codes: invalid input (2),
/// a failed hypothesis of a lifting/factorization theorem (3), and loss of
/// p-adic precision (4).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("precision loss: {0}")]
    PrecisionLoss(String),
    #[error("not a square: {0}")]
    NotASquare(String),
    #[error("inconsistent filtration: {0}")]
    Inconsistency(String),
    #[error("resource bound exceeded: {0}")]
    Resource(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn hypothesis(msg: impl Into<String>) -> Self {
        Error::HypothesisFailed(msg.into())
    }

    pub fn precision(msg: impl Into<String>) -> Self {
        Error::PrecisionLoss(msg.into())
    }

    /// Process exit code used by the command-line frontend.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidArgument(_) | Error::Resource(_) => 2,
            Error::HypothesisFailed(_) | Error::NotASquare(_) | Error::Inconsistency(_) => 3,
            Error::PrecisionLoss(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
