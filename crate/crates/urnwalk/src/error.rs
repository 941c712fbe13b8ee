use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum UrnError {
    #[error("Pólya urn must start with at least one ball of each color (got w={w}, b={b})")]
    DegeneratePolya { w: u64, b: u64 },
    #[error("urn must start with at least one ball")]
    EmptyUrn,
    #[error("white-draw probability must lie in [0,1], got {0}")]
    InvalidProbability(String),
}

#[derive(Debug, Error, PartialEq)]
pub enum WalkError {
    #[error(transparent)]
    Urn(#[from] UrnError),
    #[error("walk must have at least one dimension")]
    ZeroDimensions,
    #[error("trajectory step {step} has {got} colors, expected {expected}")]
    DimensionMismatch { step: usize, got: usize, expected: usize },
    #[error("step {step}: positions must differ by (±1, ±1), got ({dx}, {dy})")]
    InvalidDiagonalStep { step: usize, dx: i64, dy: i64 },
    #[error("path must contain at least one position")]
    EmptyPath,
}

#[derive(Debug, Error, PartialEq)]
pub enum SeriesError {
    #[error("series kind {kind} is not available for scheme {scheme}: {reason}")]
    UnsupportedCombination {
        kind: String,
        scheme: String,
        reason: String,
    },
    #[error(transparent)]
    Urn(#[from] UrnError),
}
