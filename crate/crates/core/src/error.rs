use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),
    #[error("embedding is not planar: V - E + F = {euler}, expected 2")]
    NonPlanarEmbedding { euler: i64 },
    #[error("plane graph is not 2-connected: {0}")]
    NotBiconnected(String),
    #[error("outer face is not a simple facial cycle: {0}")]
    BoundaryNotCycle(String),
    #[error("boundary edge {0}-{1} is not on the outer face")]
    EdgeNotOnBoundary(String, String),
    #[error("{0}-{1} is not a chord of the boundary cycle")]
    NotAChord(String, String),
    #[error("boundary cycle has chord {0}-{1}")]
    HasChord(String, String),
    #[error("not a near-triangulation: {0}")]
    NotNearTriangulation(String),
    #[error("cannot triangulate face {0}")]
    CannotTriangulate(String),
    #[error("{what}: {found} edges exceeds the limit of {limit} (raise it with --max-edges)")]
    TooManyEdges {
        what: &'static str,
        found: usize,
        limit: usize,
    },
    #[error("Alon-Tarsi number exceeds k_max = {0}")]
    ExceedsKMax(usize),
    #[error("no index function of G - {0}{1} has a nonzero coefficient")]
    NoWitness(String, String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal proof violation: {0}")]
    InternalProofViolation(String),
    #[error("edge set mismatch: {0}")]
    EdgeSetMismatch(String),
    #[error("the list assignment admits no proper coloring")]
    NoColoring,
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("audit failed at `{step}`: {detail}")]
    AuditFailure { step: String, detail: String },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
