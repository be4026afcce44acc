use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed token {token:?} at position {position}")]
    MalformedToken { position: usize, token: String },

    #[error("part {value} at position {position} is larger than the part before it")]
    IncreasingParts { position: usize, value: usize },

    #[error("non-positive part at position {position}")]
    NonPositivePart { position: usize },

    #[error("box ({row},{col}) lies outside the diagram")]
    OutsideDiagram { row: usize, col: usize },

    #[error("falling factorial {n}^(k={k}) requires k <= n")]
    FallingFactorial { n: usize, k: usize },

    #[error("size {size} exceeds the configured bound {bound}")]
    AboveBound { size: usize, bound: usize },

    #[error("{inner} is not contained in {outer}")]
    NotContained { outer: String, inner: String },

    #[error("diagonal range {lo}..={hi} is invalid for diagonal length {delta}")]
    DiagonalRange { lo: usize, hi: usize, delta: usize },

    #[error("window start {a} is below the maximal hook length {s}")]
    BelowMaxHook { a: usize, s: usize },

    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("weight sums to {weight} but the shape has {size} boxes")]
    WeightMismatch { weight: usize, size: usize },

    #[error("cycle type is the identity")]
    IdentityCycleType,

    #[error("divisibility precondition violated: {0}")]
    Divisibility(String),
}

pub type Result<T> = std::result::Result<T, Error>;
