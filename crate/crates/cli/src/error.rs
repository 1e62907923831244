use thiserror::Error;

/// Failures of a command, split by the exit code they map to.
#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable or malformed input; exit code 2.
    #[error("invalid input: {0}")]
    Input(String),
    /// A computation refused or failed; exit code 1.
    #[error("{0}")]
    Compute(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Compute(_) => 1,
            CliError::Input(_) | CliError::Io(_) => 2,
        }
    }

    pub(crate) fn compute(e: impl std::fmt::Display) -> Self {
        CliError::Compute(e.to_string())
    }
}
