use crate::identity::CheckReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("singular map: {0}")]
    Singular(String),
    #[error("structure maps do not commute: {0}")]
    NoncommutingMaps(String),
    #[error("missing slot {slot} required by {what}")]
    MissingSlot { slot: String, what: String },
    #[error("kind mismatch: {0}")]
    Kind(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// An input failed a prerequisite check.
    #[error("{what} failed its {check} check")]
    CheckFailed { what: String, check: String, report: Box<CheckReport> },
    #[error("image structure is not well defined: {0}")]
    ImageInconsistent(String),
    #[error("search space has {count} candidates, above the limit {limit}")]
    SearchTooLarge { count: String, limit: u64 },
    #[error("catalog {catalog}: {message}")]
    Catalog { catalog: String, message: String },
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("invalid field {field}: {message}")]
    Schema { field: String, message: String },
    #[error("unsupported schema version {0:?}")]
    Version(String),
}

impl Error {
    pub(crate) fn schema(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema { field: field.into(), message: message.into() }
    }

    pub(crate) fn check_failed(what: impl Into<String>, check: impl Into<String>, report: CheckReport) -> Self {
        Error::CheckFailed { what: what.into(), check: check.into(), report: Box::new(report) }
    }
}
