use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: String, found: String },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("operator kind `{kind}` requires auxiliary map `{aux}`")]
    MissingAuxiliary { kind: String, aux: &'static str },

    #[error("unsupported operator kind for this operation: {0}")]
    UnsupportedKind(String),

    #[error("algebra axiom violated: {0}")]
    AxiomViolation(String),

    #[error("deformation data has a nonzero degree-2 part")]
    NonzeroQuadraticPart,
}

impl Error {
    pub(crate) fn shape(expected: impl Into<String>, found: impl Into<String>) -> Self {
        Error::ShapeMismatch {
            expected: expected.into(),
            found: found.into(),
        }
    }
}
