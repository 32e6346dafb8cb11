use thiserror::Error;

/// Crate-wide error type. Every domain failure carries a stable code
/// (see [`Error::code`]) that the CLI emits in machine-readable form.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("input contains no facet lines")]
    EmptyInput,
    #[error("facet lines of differing length: {0} vs {1} vertices")]
    MixedDimension(usize, usize),
    #[error("facet line {line} repeats vertex {vertex}")]
    DuplicateVertexInFacet { line: usize, vertex: u32 },
    #[error("line {line}: token {token:?} is not a vertex identifier")]
    InvalidToken { line: usize, token: String },
    #[error("vertex {0} does not occur in the complex")]
    UnknownVertex(u32),
    #[error("vertex {0} lies in every facet; the deletion would be empty")]
    ConeApex(u32),
    #[error("vertex {0} is not the maximum vertex of the complex")]
    NotMaxVertex(u32),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("work limit exceeded: {needed} states, limit {limit}")]
    WorkLimitExceeded { needed: u128, limit: u64 },
    #[error("ground set of {size} columns exceeds the limit of {limit}")]
    GroundSetTooLarge { size: usize, limit: usize },
    #[error("{got} column labels for a matrix with {expected} columns")]
    LabelMismatch { expected: usize, got: usize },
    #[error("no matroid element has index {0}")]
    UnknownElement(usize),
    #[error("element {0} is a loop; contract it by deleting it")]
    LoopContraction(usize),
    #[error("flow vector has {got} entries, complex has {expected} facets")]
    IndexMismatch { expected: usize, got: usize },
    #[error("sigma and tau must be nonzero")]
    ZeroSigmaTau,
    #[error("residue class {class} mod {period} has {got} samples, needs {needed}")]
    InsufficientData { period: u32, class: u64, got: usize, needed: usize },
    #[error("no quasipolynomial of period <= {max_period} and degree <= {max_degree} fits the samples")]
    NoFit { max_period: u32, max_degree: usize },
    #[error("counting methods disagree: {0}")]
    MethodDisagreement(String),
    #[error("io: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable error code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyInput => "EMPTY_INPUT",
            Error::MixedDimension(..) => "MIXED_DIMENSION",
            Error::DuplicateVertexInFacet { .. } => "DUPLICATE_VERTEX_IN_FACET",
            Error::InvalidToken { .. } => "INVALID_TOKEN",
            Error::UnknownVertex(_) => "UNKNOWN_VERTEX",
            Error::ConeApex(_) => "CONE_APEX",
            Error::NotMaxVertex(_) => "NOT_MAX_VERTEX",
            Error::NotPrime(_) => "NOT_PRIME",
            Error::WorkLimitExceeded { .. } => "WORK_LIMIT_EXCEEDED",
            Error::GroundSetTooLarge { .. } => "GROUND_SET_TOO_LARGE",
            Error::LabelMismatch { .. } => "LABEL_MISMATCH",
            Error::UnknownElement(_) => "UNKNOWN_ELEMENT",
            Error::LoopContraction(_) => "LOOP_CONTRACTION",
            Error::IndexMismatch { .. } => "INDEX_MISMATCH",
            Error::ZeroSigmaTau => "ZERO_SIGMA_TAU",
            Error::InsufficientData { .. } => "INSUFFICIENT_DATA",
            Error::NoFit { .. } => "NO_FIT",
            Error::MethodDisagreement(_) => "METHOD_DISAGREEMENT",
            Error::Io(_) => "IO_ERROR",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
