use thiserror::Error;

use crate::complex::Vertex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),

    #[error("not a simplex: {0:?}")]
    NotASimplex(Vec<Vertex>),

    #[error("not a loop: {0}")]
    NotALoop(String),

    #[error("complex is not flag: the 3-clique {0:?} spans no triangle")]
    NotFlag([Vertex; 3]),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("sub-loop {0:?} has no diagonal")]
    NoDiagonal(Vec<Vertex>),

    #[error("no filling diagram with at most {max_area} triangles")]
    BudgetExceeded { max_area: usize },

    #[error("map image uses vertex {0} which is not in the target")]
    TargetMismatch(Vertex),

    #[error("not a triangulated disc: {0}")]
    NotADisc(String),

    #[error("disc is not flag: the 3-clique {0:?} bounds no face")]
    NotFlagDisc([Vertex; 3]),

    #[error("complex is disconnected")]
    Disconnected,

    #[error("{vertices} vertices exceeds the exact four-point limit of {limit}")]
    TooLargeForExact { vertices: usize, limit: usize },

    #[error("homotopical triviality needs simply_connected metadata or a bounded filling budget")]
    MissingTrivialityEvidence,

    #[error("unrealizable disc: {0}")]
    Unrealizable(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
