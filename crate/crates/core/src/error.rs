use thiserror::Error;

use crate::bigraph::VertexId;

/// Errors raised while building graphs and construction sequences.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("self loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("edge {0}-{1} joins two vertices of the same shore")]
    SameShore(VertexId, VertexId),
    #[error("graph is not bipartite (odd cycle through {0})")]
    NotBipartite(VertexId),
    #[error("step {step}: expected vertex v{step}, found {found}")]
    StepOutOfOrder { step: usize, found: VertexId },
    #[error("step {step}: anchor {anchor} does not precede the added vertex")]
    AnchorNotEarlier { step: usize, anchor: VertexId },
    #[error("step 2 must add a pending vertex on v1")]
    BadFirstStep,
    #[error("prefix length {index} outside 1..={n}")]
    PrefixOutOfRange { index: usize, n: usize },
    #[error("need at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("twin probability {0} outside [0, 1]")]
    BadProbability(f64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognitionError {
    #[error("graph has no vertices")]
    Empty,
    #[error("recognition needs at least 2 vertices")]
    SingleVertex,
    #[error("graph is disconnected")]
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LatticeError {
    #[error("invalid construction sequence: {0}")]
    InvalidSequence(#[from] GraphError),
    #[error("the lattice is defined for graphs with at least 2 vertices")]
    TooSmall,
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown biclique {0}")]
    UnknownBiclique(usize),
    #[error("corrupted interval: arc {alpha} is not an ancestor of arc {beta}")]
    CorruptedInterval { alpha: usize, beta: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("input exceeds the brute-force limit ({what} = {actual}, limit {limit})")]
    GuardExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
}
