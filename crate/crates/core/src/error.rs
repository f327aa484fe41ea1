use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("partition {partition} has no part {part}")]
    MissingPart { partition: String, part: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("rational function {0} is not a polynomial")]
    NotPolynomial(String),
    #[error("denominator vanishes at {0}")]
    PoleAtPoint(String),
    #[error("degree {n} exceeds the configured bound {bound}")]
    DegreeTooLarge { n: usize, bound: usize },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("degenerate eigen-system for {lambda}: constrained nullspace has dimension {dim}")]
    DegenerateSystem { lambda: String, dim: usize },
    #[error("checked postcondition failed: {0}")]
    Invariant(String),
    #[error("vertices {0} and {1} are adjacent")]
    AdjacentPair(String, String),
    #[error("matching is not good for the {0}-graph")]
    NotGoodMatching(String),
    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
    #[error("format `{format}` is not supported for {payload}")]
    UnsupportedFormat { format: String, payload: &'static str },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
