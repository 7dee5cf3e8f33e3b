use thiserror::Error;

/// Errors raised by the computational core.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("characteristic conflict: {0}")]
    CharacteristicConflict(String),

    #[error("point {0} is not a singular point")]
    NotSingular(String),

    #[error("singular point of type {0} needs an explicit condition block")]
    MissingConditions(String),

    #[error("degenerate singularity frame: {0}")]
    DegenerateFrame(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("negative geometric genus {0}: singularity data inconsistent with the degrees")]
    GenusNegative(i64),

    #[error("degree error: {0}")]
    Degree(String),

    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::FieldMismatch(..) => "field-mismatch",
            Error::Shape(_) => "shape",
            Error::InvalidField(_) => "invalid-field",
            Error::CharacteristicConflict(_) => "characteristic-conflict",
            Error::NotSingular(_) => "not-singular",
            Error::MissingConditions(_) => "missing-conditions",
            Error::DegenerateFrame(_) => "degenerate-frame",
            Error::InternalInconsistency(_) => "internal-inconsistency",
            Error::GenusNegative(_) => "genus-negative",
            Error::Degree(_) => "degree",
            Error::Config(_) => "config",
        }
    }

    /// Errors caused by the input document rather than by the computation.
    pub fn is_config(&self) -> bool {
        matches!(
            self,
            Error::Config(_) | Error::Degree(_) | Error::InvalidField(_)
        )
    }
}
