use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSysError {
    #[error("unsupported root system `{0}`")]
    UnsupportedSeries(String),

    #[error("invalid subsystem basis: {0}")]
    InvalidSubsystem(String),

    #[error("expected a vector of length {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("cannot parse rational `{0}`")]
    BadRational(String),
}
