//! Error type shared across the crate.

use thiserror::Error;

/// Errors surfaced by the exact computations.
#[derive(Debug, Error)]
pub enum Error {
    /// A weight is not invertible modulo the group order.
    #[error("weights not coprime to order {order}")]
    WeightsNotCoprime {
        /// The cyclic group order r.
        order: String,
    },

    /// The family parameter c is below the supported range (the analysis
    /// of the tower assumes c >= 2).
    #[error("c must be at least 2 (got {0})")]
    CTooSmall(u32),

    /// A scalar overflowed while evaluating the named quantity.
    #[error("integer overflow computing {0}")]
    Overflow(&'static str),

    /// An argument is outside the operation's domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The requested datum is not defined for this fiber type.
    #[error("{op} is not defined for fiber type {fiber}")]
    UnsupportedFiber {
        /// Operation name.
        op: &'static str,
        /// Display form of the fiber.
        fiber: String,
    },

    /// Nori's ramification analysis requires an extremal fibration.
    #[error("configuration is not extremal (Mordell-Weil rank {rank})")]
    NotExtremal {
        /// The computed Mordell-Weil rank.
        rank: i64,
    },

    /// The fiber configuration violates a global consistency constraint.
    #[error("inconsistent configuration: {0}")]
    InconsistentConfig(String),

    /// Plurigenus growth did not fall into a recognised class.
    #[error("plurigenus growth is inconsistent: {0}")]
    InconsistentGrowth(String),

    /// A congruence signature table could not be read.
    #[error("congruence table unavailable at {path}: {reason}")]
    TableUnavailable {
        /// Path that was attempted.
        path: String,
        /// Underlying I/O failure.
        reason: String,
    },

    /// A congruence signature table failed to parse.
    #[error("congruence table parse error at line {line}: {reason}")]
    TableParse {
        /// 1-based line number.
        line: usize,
        /// What went wrong.
        reason: String,
    },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// The family parameter must satisfy c >= 2.
pub(crate) fn require_c(c: u32) -> Result<()> {
    if c < 2 {
        Err(Error::CTooSmall(c))
    } else {
        Ok(())
    }
}
