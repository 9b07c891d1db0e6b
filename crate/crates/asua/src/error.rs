use crate::graph::VertexId;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the crate, from graph construction
/// through solving, file parsing, and family specs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop on {0} is not allowed")]
    SelfLoop(VertexId),
    #[error("{id} is out of range for a graph on {vertex_count} vertices")]
    IdOutOfRange { id: VertexId, vertex_count: usize },
    #[error("edge {u} {v} has multiplicity 0")]
    ZeroMultiplicity { u: VertexId, v: VertexId },
    #[error("absorbing set is empty")]
    EmptyAbsorbingSet,
    #[error("no absorbing vertex is reachable from {}", join_ids(.stranded))]
    UnreachableAbsorber { stranded: Vec<VertexId> },
    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(VertexId),
    #[error("linear system is singular")]
    SingularSystem,
    #[error("expected a single absorbing vertex, found {count}")]
    MultipleAbsorbers { count: usize },
    #[error("value vector does not match the transient vertex set")]
    IndexMismatch,
    #[error("walk start {0} is absorbing")]
    StartIsAbsorbing(VertexId),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("bad spec: {0}")]
    BadSpec(String),
    #[error("transition matrix is not square")]
    NotSquare,
    #[error("row {row} of the transition matrix is not a probability distribution")]
    NotStochastic { row: usize },
    #[error("line {line}: row length differs from the first row")]
    RaggedRows { line: usize },
    #[error("line {line}, column {col}: illegal character {ch:?}")]
    IllegalCharacter { line: usize, col: usize, ch: char },
    #[error("maze has no target cell")]
    NoTarget,
    #[error("maze is empty")]
    EmptyMaze,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

fn join_ids(ids: &[VertexId]) -> String {
    let parts: Vec<String> = ids.iter().map(|v| v.to_string()).collect();
    parts.join(", ")
}
