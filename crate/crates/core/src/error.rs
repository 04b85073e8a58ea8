use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line coefficients a and b are both zero")]
    DegenerateLine,
    #[error("segment endpoints coincide")]
    DegenerateSegment,
    #[error("vertical line has no dual point")]
    NoDual,
    #[error("operation needs at least one point")]
    EmptyInput,
    #[error("polygon vertices are not in strictly convex counterclockwise position")]
    NotConvex,
    #[error("convex hulls are not strictly separable")]
    NotSeparable,
    #[error("corridor generator is vertical")]
    VerticalGenerator,
    #[error("convex combination coefficients must be non-negative and sum to one")]
    BadCoefficients,
    #[error("line is not contained in the corridor")]
    NotInCorridor,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("points are not pairwise x-distinct")]
    NotXDistinct,
    #[error("weak cutting failed after {retries} retries (worst face weight {worst_weight})")]
    CuttingFailed { retries: u32, worst_weight: String },
    #[error("round-and-cut exceeded {limit} iterations at budget t = {t}")]
    IterationLimit { t: u64, limit: usize },
    #[error("search over the budget t exhausted at t = {t}")]
    BudgetExhausted { t: u64 },
    #[error("a bad region cannot be split by any candidate")]
    UnsplittableRegion,
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
