use thiserror::Error;

/// Errors raised by the library.
///
/// The CLI maps [`Error::is_domain`] errors to exit code 2 and everything
/// else to exit code 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("degree bound violation: {0}")]
    DegreeBound(String),

    #[error("length mismatch: {0}")]
    LengthMismatch(String),

    #[error("form degenerates on L0 (s = 0)")]
    DegenerateOnL0,

    #[error("not in discriminant complement")]
    NotRegular,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A mathematical identity that must hold did not. Always a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Whether the input was well formed but outside the operation's domain.
    pub fn is_domain(&self) -> bool {
        matches!(self, Error::DegenerateOnL0 | Error::NotRegular | Error::Precondition(_))
    }

    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroPolynomial => "zero_polynomial",
            Error::DegreeBound(_) => "degree_bound",
            Error::LengthMismatch(_) => "length_mismatch",
            Error::DegenerateOnL0 => "degenerate_on_l0",
            Error::NotRegular => "not_regular",
            Error::Precondition(_) => "precondition",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::Parse(_) => "parse",
            Error::Internal(_) => "internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
