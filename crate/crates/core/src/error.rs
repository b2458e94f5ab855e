use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("cannot identify vertex {0} with itself")]
    IdentifySame(usize),

    #[error("vertex {0} must not belong to the target set")]
    SourceInTarget(usize),

    #[error("vertex set must be non-empty")]
    EmptySet,

    #[error("roots must be pairwise distinct")]
    RootsNotDistinct,

    #[error("expected {expected} roots, got {got}")]
    RootCount { expected: &'static str, got: usize },

    #[error("graph has {n} vertices, above the oracle cap of {cap}")]
    OracleCap { n: usize, cap: usize },

    #[error("colorings disagree on separator vertex {0}")]
    SeparatorDisagreement(usize),

    #[error("coloring leaves vertex {0} uncolored")]
    Uncolored(usize),

    #[error("coloring is improper on edge {0}-{1}")]
    ImproperEdge(usize, usize),

    #[error("chromatic number exceeds {0}")]
    ChromaticNumberExceeds(usize),

    #[error("graph is not {0}-connected")]
    NotConnected(usize),

    #[error("invalid attachment: {0}")]
    Attachment(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
