use thiserror::Error;

use crate::perm::Point;

/// Errors produced by permutation, ranking and group operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A cycle listed the same point twice.
    #[error("malformed cycle: point {point} repeated")]
    MalformedCycle { point: Point },

    /// An array form was not a permutation of `0..len`.
    #[error("not a bijection: {reason}")]
    NotABijection { reason: String },

    /// A requested size does not cover every moved point.
    #[error("size {size} is too small (largest moved point is {max_moved})")]
    SizeTooSmall { size: usize, max_moved: Point },

    /// Unranking was asked for a rank outside `0..size!`.
    #[error("size is too small")]
    RankOutOfRange,

    /// The base-62 label alphabet cannot encode this many points.
    #[error("size is too large for labels")]
    LabelSizeTooLarge { size: usize },

    /// Closure would produce more elements than the configured limit.
    #[error("group order exceeds the limit of {limit} (reached {reached} elements)")]
    GroupTooLarge { limit: usize, reached: usize },

    /// Cycle text did not match the grammar.
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

impl Error {
    /// True for errors caused by malformed textual input rather than by the
    /// mathematics of a well-formed request.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::MalformedCycle { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
