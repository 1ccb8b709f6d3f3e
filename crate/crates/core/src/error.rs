//! Error type shared by the engine modules.

use thiserror::Error;

/// Errors surfaced by the partition, polynomial and multiplicity engines.
///
/// Internal consistency violations (a constant term that should be an
/// integer but is not, a division that a structure theorem guarantees to be
/// exact failing) are deliberately loud: they indicate a bug, not bad input.
#[derive(Debug, Error)]
pub enum Error {
    /// A partition string or part list failed validation.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// The shape is not typical for the requested `(a, b)` rectangle.
    #[error("partition {lam} is not typical for ({a},{b})")]
    NotTypical { lam: String, a: u32, b: u32 },

    /// A skew shape was requested with `mu` not contained in `lam`.
    #[error("partition {mu} is not contained in {lam}")]
    NotContained { lam: String, mu: String },

    /// The shape fails the largeness test for the given matrix sizes.
    #[error("partition {lam} is not large for ({k},{l})")]
    NotLarge { lam: String, k: u32, l: u32 },

    /// Character or Kronecker arguments have mismatched sizes.
    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    /// Laurent polynomial division left a nonzero remainder.
    #[error("non-exact division: {0}")]
    NonExactDivision(String),

    /// A region expansion was requested with a factor of non-positive weight.
    #[error("bad region: {0}")]
    BadRegion(String),

    /// A quantity that must be a nonnegative integer came out otherwise.
    #[error("negative or non-integral result: {0}")]
    NegativeOrNonIntegral(String),

    /// The on-disk character cache is unreadable or self-inconsistent.
    #[error("character cache: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
