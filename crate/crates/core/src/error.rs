use thiserror::Error;

/// Failure to read a graph file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {{{u},{v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("missing vertex-count header")]
    MissingHeader,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BitstringError {
    #[error("invalid character {ch:?} at position {pos}; expected '0' or '1'")]
    BadChar { ch: char, pos: usize },
    #[error("bitstring has length {found}, expected {expected}")]
    Length { expected: usize, found: usize },
}

/// Violated preconditions and capacity limits of the core operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph is not a tree")]
    NotATree,
    #[error("matching is not a perfect matching of the graph")]
    NotPerfect,
    #[error("{{{0},{1}}} is not an edge of the graph")]
    EdgeNotFound(usize, usize),
    #[error("invalid edge {{{0},{1}}}: self-loop or duplicate")]
    InvalidEdge(usize, usize),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vector length {found} does not match vertex count {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("theta not invertible: graph is degenerate (radical dimension {radical_dim})")]
    Degenerate { radical_dim: usize },
    #[error("state space too large: n = {n} exceeds capacity {limit}")]
    Capacity { n: usize, limit: usize },
    #[error("vertex {0} is not the inserted subdivision vertex")]
    NotSubdivisionVertex(usize),
    #[error("vertex {u} is not adjacent to subdivision vertex {z}")]
    NotSubdivisionEndpoint { u: usize, z: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
