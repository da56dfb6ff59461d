use thiserror::Error;

/// Crate-wide error type.
///
/// Geometry routines validate their inputs up front and return one of these
/// instead of panicking; numerical failure modes (solver stall, too-thin
/// rejection region) get their own variants so callers can tell them apart
/// from bad input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("non-finite value in {0}")]
    NonFinite(String),

    #[error("size cap exceeded: {0}")]
    SizeCap(String),

    #[error("simplex iteration cap exceeded after {0} pivots")]
    SolverStalled(u64),

    #[error("rank-deficient system: {0}")]
    RankDeficient(String),

    #[error("polytope is not simple: vertex {vertex} has {degree} neighbors, expected {expected}")]
    NotSimple {
        vertex: usize,
        degree: usize,
        expected: usize,
    },

    #[error("vertex coordinates must be nonnegative: {0}")]
    NotStandardForm(String),

    #[error("not a lattice polytope: {0}")]
    NotLattice(String),

    #[error("rational reconstruction failed: {0}")]
    RationalReconstruction(String),

    #[error("cone acceptance rate below {floor:e} after {proposals} proposals")]
    TooThinCone { floor: f64, proposals: u64 },

    #[error("({i}, {j}) is not an edge of the polytope")]
    NotAnEdge { i: usize, j: usize },

    #[error("degenerate shadow: {0}")]
    DegenerateShadow(String),

    #[error("unknown check '{name}'; valid checks: {valid}")]
    UnknownCheck { name: String, valid: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("internal error: {0}")]
    Internal(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
