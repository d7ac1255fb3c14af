use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("geometry must have at least one point")]
    EmptyGeometry,

    #[error("line {index} has {size} distinct points; every line needs at least 2")]
    InvalidLine { index: usize, size: usize },

    #[error("line {line} uses point {point}, but the geometry has {n_points} points")]
    InvalidPoint {
        line: usize,
        point: usize,
        n_points: usize,
    },

    #[error("point {point} is out of range for a geometry with {n_points} points")]
    PointOutOfRange { point: usize, n_points: usize },

    #[error("the given point set is not a subspace")]
    NotASubspace,

    #[error("exhaustive exchange check on {n_points} points exceeds the budget (max {max_points})")]
    EpBudgetExceeded { n_points: usize, max_points: usize },

    #[error("order must be a permutation of the point set")]
    NotAPermutation,

    #[error("input sequence is not independent")]
    DependentInput,

    #[error("input set does not generate the geometry")]
    NotGenerating,

    #[error("chain must contain at least one member")]
    EmptyChain,

    #[error("chain must start at the empty subspace")]
    ChainMustStartEmpty,

    #[error("chain member {index} is not a subspace")]
    ChainMemberNotSubspace { index: usize },

    #[error("chain members {index} and {} are not strictly increasing", index + 1)]
    ChainNotIncreasing { index: usize },

    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),

    #[error("unsupported field order {q}")]
    UnsupportedField { q: usize },

    #[error("construction would need {points} points, above the cap {cap}")]
    PointCapExceeded { points: usize, cap: usize },

    #[error("arguments must be distinct")]
    NotDistinct,

    #[error("matrix dimensions do not match: {0}")]
    DimensionMismatch(String),

    #[error("operation needs polar rank at least 2, got {prk}")]
    DegenerateRank { prk: usize },

    #[error("subspace is not nice: it contains no pair of disjoint maximal singular subspaces")]
    NotNice,

    #[error("quotient is undefined for the full point set")]
    QuotientOfFullSpace,

    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}
