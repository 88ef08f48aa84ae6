use std::path::PathBuf;

use fdim_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: node {label:?} has a loop")]
    Loop { line: usize, label: String },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("invalid document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("verification failed: {0}")]
    Failed(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    /// 1 = a certificate did not verify, 2 = bad input, 3 = a cap or budget
    /// ran out.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Core(e) if e.is_cap_exceeded() => 3,
            CliError::Core(CoreError::Verification(_) | CoreError::SizeMismatch { .. }) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
