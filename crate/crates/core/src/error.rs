use thiserror::Error;

/// Errors surfaced by body construction, I/O and the numeric routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("empty result: {0}")]
    EmptyResult(String),
    #[error("resolution error: {0}")]
    Resolution(String),
    #[error("not a surface area measure: closure defect {defect:.3e} exceeds {tol:.1e}")]
    NonMeasure { defect: f64, tol: f64 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("linear program failed: {0}")]
    Lp(String),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Schema(e.to_string())
    }
}
