use thiserror::Error;

/// Errors raised by the library.
///
/// Each variant maps onto one of three broad classes (see [`Error::kind`]) so
/// that front ends can translate failures into stable exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: {left} variables vs {right} variables")]
    AmbientMismatch { left: usize, right: usize },

    #[error("variable index x{index} out of range for a ring with {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("resource limit exceeded: {what} ({count} > {limit})")]
    ResourceLimit {
        what: &'static str,
        count: usize,
        limit: usize,
    },

    #[error("colon or saturation by the zero ideal")]
    ZeroDivisor,

    #[error("operation requires a nonzero ideal")]
    ZeroIdeal,

    #[error("operation requires a proper ideal")]
    UnitIdeal,

    #[error("characteristic {0} is not 0 or a prime")]
    InvalidCharacteristic(u64),

    #[error("operation requires a squarefree ideal")]
    NotSquarefree,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Coarse classification of an [`Error`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed input or violated precondition.
    Semantic,
    /// A configured resource cap was hit.
    Resource,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::ResourceLimit { .. } | Error::ExponentOverflow => ErrorKind::Resource,
            _ => ErrorKind::Semantic,
        }
    }

    /// Short machine-readable code, stable across releases.
    pub fn code(&self) -> &'static str {
        match self {
            Error::AmbientMismatch { .. } => "ambient-mismatch",
            Error::IndexOutOfRange { .. } => "index-out-of-range",
            Error::ExponentOverflow => "exponent-overflow",
            Error::ResourceLimit { .. } => "resource-limit",
            Error::ZeroDivisor => "zero-divisor",
            Error::ZeroIdeal => "zero-ideal",
            Error::UnitIdeal => "unit-ideal",
            Error::InvalidCharacteristic(_) => "invalid-characteristic",
            Error::NotSquarefree => "not-squarefree",
            Error::Precondition(_) => "precondition-violation",
            Error::UnsupportedShape(_) => "unsupported-shape",
            Error::InvalidInput(_) => "invalid-input",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
