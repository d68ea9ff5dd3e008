use thiserror::Error;

use crate::cartan::CartanType;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An unsupported family/rank combination, or some other invalid setup.
    #[error("configuration error: {0}")]
    Config(String),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    Dimension { expected: usize, actual: usize },

    #[error("datum mismatch: {left} vs {right}")]
    DatumMismatch { left: CartanType, right: CartanType },

    #[error("invalid node index {index} (valid nodes are 0..={max})")]
    InvalidNode { index: usize, max: usize },

    /// The input lies outside the domain of the operation (a non-Grassmannian
    /// element, a vector that is not a coweight, a non-core partition, ...).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A consistency check that should never fail did.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
