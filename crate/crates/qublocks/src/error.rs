use thiserror::Error;

/// Errors raised by the combinatorial layer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The (family, f, eps) combination does not classify any blocks.
    #[error("inadmissible regime: {0}")]
    InadmissibleRegime(String),

    /// An operation needed a concrete (q, l) pair that was not supplied.
    #[error("arithmetic witness required: {0}")]
    MissingWitness(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
