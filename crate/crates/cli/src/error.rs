use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("method unavailable: {0}")]
    Unavailable(String),
    #[error("convergence failure: {0}")]
    Convergence(String),
    #[error("output error: {0}")]
    Output(String),
    #[error("{0}")]
    ChecksFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Input(_) => 2,
            Self::Unavailable(_) => 3,
            Self::Convergence(_) => 4,
            Self::Output(_) | Self::ChecksFailed(_) => 1,
        }
    }
}

impl From<qstate_core::StateError> for CliError {
    fn from(e: qstate_core::StateError) -> Self {
        Self::Input(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::Output(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        Self::Output(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        Self::Output(e.to_string())
    }
}
