use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Domain errors. Each message names the precondition that failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("polynomial is not symmetric: {0}")]
    NotSymmetric(String),

    #[error("degenerate evaluation point: {0}")]
    DegeneratePoint(String),

    #[error("polytope is empty")]
    EmptyPolytope,

    #[error("polytope is unbounded")]
    Unbounded,

    #[error("rank {rank} is smaller than the largest height {height}")]
    RankTooSmall { rank: usize, height: usize },

    #[error("validation failed: {0}")]
    ValidationFailed(String),

    #[error("inconsistent affine hull: {0}")]
    InconsistentAffineHull(String),

    #[error("not determined at this number of variables: {0}")]
    Undetermined(String),

    #[error("group closure exceeds {0} elements")]
    GroupTooLarge(usize),

    #[error("iteration cap exceeded: {0}")]
    IterationCap(String),

    #[error("computation too large: {0}")]
    TooLarge(String),

    #[error("parse error: {0}")]
    Parse(String),
}
