use thiserror::Error;

/// Errors raised by the workbench.
///
/// `Input`-flavoured variants mean the caller handed over something malformed
/// or violating a precondition; `Internal` means an invariant of this crate broke.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ground set of {size} elements is too large for exhaustive check (cap {cap})")]
    TooLarge { size: usize, cap: usize },

    #[error("ground set of {0} elements exceeds the 64-element oracle limit")]
    GroundTooLarge(usize),

    #[error("duplicate element identifier `{0}`")]
    DuplicateElement(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("invalid dimaze: {0}")]
    InvalidDimaze(String),

    #[error("invalid bimaze: {0}")]
    InvalidBimaze(String),

    #[error("not a path system: {0}")]
    InvalidPathSystem(String),

    #[error("not an alternating walk: {0}")]
    InvalidWalk(String),

    #[error("not an m0-matching: {0}")]
    InvalidMatching(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("document error: {0}")]
    Document(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
