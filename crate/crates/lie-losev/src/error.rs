use lie_rootsys::{Root, Q};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LosevError {
    #[error("invalid pinning: {0}")]
    InvalidPinning(String),

    #[error("unsupported route: {0}")]
    UnsupportedRoute(String),

    #[error("not strongly dominant: pairing with {root} is {pairing}")]
    NotStronglyDominant { root: Root, pairing: Q },

    #[error("cannot parse Cartan type `{0}`")]
    BadCartanType(String),
}
