use alloc::string::String;

use crate::point::Point;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Why a candidate vector set is not a set of moves.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MoveSetError {
    #[error("the zero vector is not a move")]
    Zero,
    #[error("move {0} has no negative in the set")]
    Asymmetric(Point),
    #[error("move {multiple} is {factor} times the move {base}")]
    Multiple { base: Point, multiple: Point, factor: i64 },
    #[error("move {move_} has dimension {found}, expected {expected}")]
    Dimension { move_: Point, expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{what} is {value}, which exceeds the cap {cap}")]
    CapExceeded { what: &'static str, value: u64, cap: u64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix does not have full row rank")]
    RankDeficient,
    #[error("invalid move set: {0}")]
    MoveSet(#[from] MoveSetError),
    #[error("node {0} has a loop")]
    Loop(usize),
    #[error("node index {index} out of range for a graph on {nodes} nodes")]
    NodeOutOfRange { index: usize, nodes: usize },
    #[error("coloring is not proper: nodes {0} and {1} are adjacent and share a color")]
    ImproperColoring(usize, usize),
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("a polytope needs at least one generator")]
    EmptyPolytope,
    #[error("the construction needs a graph with at least one node")]
    EmptyGraph,
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("certificate check failed: {0}")]
    Verification(String),
    #[error("{0}")]
    Unsupported(String),
}

impl Error {
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
