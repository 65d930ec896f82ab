use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Coarse failure classes, used by the command line to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Parse,
    Precondition,
    CapExceeded,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    JacobiFailure(usize, usize, usize),
    #[error("structure constants are not antisymmetric at ({0}, {1})")]
    NotAntisymmetric(usize, usize),
    #[error("action of basis element {0} is not a derivation")]
    ActionNotDerivation(usize),
    #[error("action is not a Lie homomorphism on basis pair ({0}, {1})")]
    ActionNotHomomorphism(usize, usize),
    #[error("subspace {0} is not a subalgebra")]
    NotSubalgebra(&'static str),
    #[error("subspaces do not form a direct sum")]
    NotDirect,
    #[error("subspaces do not span the algebra")]
    NotSpanning,
    #[error("the Lie algebra n is not 2-step nilpotent")]
    NotTwoStepNilpotent,
    #[error("product is not a post-Lie structure: {0}")]
    NotPostLie(String),
    #[error("map is not an automorphism")]
    NotAutomorphism,
    #[error("free parameter dimension {dim} exceeds cap {cap}")]
    ParameterCap { dim: usize, cap: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),
    #[error("malformed rational `{0}`")]
    MalformedRational(String),
    #[error("unknown basis label `{0}`")]
    UnknownBasisLabel(String),
    #[error("duplicate entry for ({0}, {1})")]
    DuplicateEntry(String, String),
    #[error("malformed document: {0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::MalformedRational(_)
            | Error::UnknownBasisLabel(_)
            | Error::DuplicateEntry(..)
            | Error::Format(_)
            | Error::Json(_)
            | Error::Io(_) => ErrorClass::Parse,
            Error::ParameterCap { .. } => ErrorClass::CapExceeded,
            _ => ErrorClass::Precondition,
        }
    }
}
