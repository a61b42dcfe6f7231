use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("map entry {index} -> {image} out of range (target has {n} vertices)")]
    MapOutOfRange { index: usize, image: usize, n: usize },

    #[error("map has {got} entries but the source graph has {expected} vertices")]
    MapLength { expected: usize, got: usize },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid word {0:?}: only '+' and '-' are allowed")]
    InvalidWord(String),

    #[error("loop pattern has an empty loop body")]
    EmptyLoopBody,

    #[error("tree gadget requires nonempty left and right words")]
    EmptyGadgetWord,

    #[error("invalid tree string {0:?}")]
    InvalidTree(String),

    #[error("edge ({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),

    #[error("edge ({0}, {1}) does not lie on a cycle of the underlying undirected graph")]
    NotOnCycle(usize, usize),

    #[error("invalid family parameter: {0}")]
    InvalidFamily(String),

    #[error("unknown graph or family spec {0:?}")]
    UnknownSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
