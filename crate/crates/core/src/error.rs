use thiserror::Error;

/// Errors raised while building or evaluating fuzzy sets, samples and depths.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("trapezoid knots must satisfy a <= b <= c <= d, got ({a}, {b}, {c}, {d})")]
    OrderViolation { a: f64, b: f64, c: f64, d: f64 },

    #[error("{what} = {value} is outside {range}")]
    OutOfRange {
        what: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("fuzzy sets are sampled on different grids")]
    GridMismatch,

    #[error("matrix is singular (|det| = {det:e})")]
    SingularMatrix { det: f64 },

    #[error("direction is not a unit vector (norm {norm})")]
    NotUnit { norm: f64 },

    #[error("direction is not a node of the direction grid")]
    OffGrid,

    #[error("invalid level structure: {0}")]
    InvalidLevels(String),

    #[error("empty input")]
    EmptyInput,

    #[error("sample has no atom with positive weight")]
    EmptySample,

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("invalid perturbation: {0}")]
    InvalidPerturbation(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
