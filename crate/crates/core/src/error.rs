use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parts are not weakly decreasing: {0:?}")]
    NotAPartition(Vec<u32>),

    #[error("cannot parse partition {input:?}: {reason}")]
    PartitionSyntax { input: String, reason: String },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("polynomial division is not exact (nonzero remainder)")]
    InexactDivision,

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("computation exceeds budget: {0}")]
    BudgetExceeded(String),

    #[error("unsupported inner degree n = {0} (only tabulated for n = 6 and n = 7)")]
    UnsupportedDegree(u32),

    #[error("unknown generator family {0:?}")]
    UnknownFamily(String),

    #[error("generator data for {family} failed its checksum (expected {expected}, got {actual})")]
    ChecksumMismatch {
        family: String,
        expected: String,
        actual: String,
    },

    #[error("generator data corrupted: {0}")]
    DataCorruption(String),

    #[error("I/O error on {path}: {message}")]
    Io { path: String, message: String },

    #[error("malformed data: {0}")]
    Malformed(String),

    #[error("tableau parse error at byte {offset}: {message}")]
    TableauSyntax { offset: usize, message: String },

    #[error("tableau content violation: {0}")]
    Content(String),

    #[error("shape violation: {0}")]
    Shape(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<String>, err: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            message: err.to_string(),
        }
    }
}
