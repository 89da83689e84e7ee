use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("complex has no facets")]
    EmptyComplex,
    #[error("facet is the empty set")]
    EmptyFacet,
    #[error("vertex {0} appears in no facet")]
    GhostVertex(usize),
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex count {0} is outside the supported range 1..=31")]
    BadVertexCount(usize),
    #[error("restriction contains no nonempty face")]
    EmptyRestriction,
    #[error("vertex set is not a face of the complex")]
    NotAFace,
    #[error("skeleton dimension {k} is invalid for a complex of dimension {dim}")]
    BadSkeletonDim { k: isize, dim: isize },
    #[error("partial star needs at least one new vertex")]
    BadCount,
    #[error("{0} vertices is too many for this operation (limit {1})")]
    TooLarge(usize, usize),
    #[error("operation needs a complex of dimension at most {expected}, got {got}")]
    WrongDim { expected: isize, got: isize },
    #[error("complex is not a matroid complex")]
    NotMatroid,
    #[error("malformed h-vector: {0}")]
    MalformedHVector(String),
    #[error("malformed f-vector: {0}")]
    MalformedFVector(String),
    #[error("malformed partition: {0}")]
    MalformedPartition(String),
    #[error("m-sequence must have at least one entry")]
    EmptyMSequence,
    #[error("integer overflow in exact count")]
    Overflow,
    #[error("monomial ideal is not artinian")]
    NotArtinian,
    #[error("monomial ideal is not squarefree")]
    NotSquarefree,
    #[error("complex defined by the ideal has dimension {got}, above the allowed {max}")]
    DimTooHigh { got: isize, max: isize },
    #[error("monomial has {got} exponents, ideal has {expected} variables")]
    VariableMismatch { expected: usize, got: usize },
    #[error("malformed monomial: {0}")]
    MalformedMonomial(String),
    #[error("{0}")]
    Json(String),
    #[error("cross-check failed:\n{0}")]
    AssertionFailure(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
