use thiserror::Error;

/// Errors raised by constructors, validators and transforms.
///
/// Vertex positions carried in diagnostics are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{kind} graph needs n >= {min}, got {n}")]
    GraphSize { kind: &'static str, n: usize, min: usize },

    #[error("adjacency matrix is not square ({rows} rows, row {row} has {len} entries)")]
    NotSquare { rows: usize, row: usize, len: usize },

    #[error("adjacency matrix is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },

    #[error("loop at vertex {0}; loops are not supported")]
    Loop(usize),

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph description does not match its kind: {0}")]
    GraphMismatch(String),

    #[error("vector length {got} does not match vertex count {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("entry {vector}_{index} must be positive")]
    NonPositive { vector: &'static str, index: usize },

    #[error("identity fails at row {row}: d*r = {lhs} but neighbour sum = {rhs}")]
    RowIdentity { row: usize, lhs: String, rhs: String },

    #[error("r is not primitive (gcd {0})")]
    NotPrimitive(String),

    #[error("r_{row} = {value} does not divide neighbour sum {sum}")]
    Divisibility { row: usize, value: String, sum: String },

    #[error("position {pos} out of range {lo}..={hi}")]
    Position { pos: i64, lo: i64, hi: i64 },

    #[error("operation requires a {expected} structure, got {got}")]
    WrongFamily { expected: &'static str, got: &'static str },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid subdivision plan: {0}")]
    Plan(String),

    #[error("invalid ballot word: {0}")]
    Word(String),

    #[error("invalid multiset: {0}")]
    Multiset(String),

    #[error("invalid triangulation: {0}")]
    Triangulation(String),

    #[error("d is not an arithmetical d-structure: {0}")]
    NotArithmetical(String),

    #[error("search budget exceeded ({0})")]
    Budget(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
