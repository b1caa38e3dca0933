use thiserror::Error;

/// Errors raised by the constructions in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("no simplices given")]
    EmptyInput,
    #[error("empty simplex in input")]
    EmptySimplex,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex `{0}` already present")]
    VertexCollision(String),
    #[error("basepoint count {got} does not match {expected} complexes")]
    BasepointMismatch { expected: usize, got: usize },
    #[error("not a subcomplex: simplex {0:?} is missing from the ambient complex")]
    NotSubcomplex(Vec<String>),
    #[error("complex has dimension {0}, at most 2 is supported")]
    DimensionTooLarge(isize),
    #[error("complex is not flag: clique {0:?} spans no simplex")]
    NotFlag(Vec<String>),
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator index {0} out of range")]
    GeneratorOutOfRange(usize),
    #[error("operation needs a right-angled Coxeter system")]
    NotRightAngled,
    #[error("subset {0:?} is not spherical")]
    NotSpherical(Vec<String>),
    #[error("element is the identity")]
    IdentityElement,
    #[error("invalid slope set: {0}")]
    InvalidSlopes(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("expected {expected} generator images, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("{what} has {size} cells, above the cap of {cap} (set {var} to raise it)")]
    TooLarge {
        what: &'static str,
        size: u64,
        cap: u64,
        var: &'static str,
    },
    #[error("subdivision did not reach flag-no-squares after {0} rounds")]
    SubdivisionFailed(usize),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
