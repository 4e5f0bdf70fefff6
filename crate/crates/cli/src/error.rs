use std::process::ExitCode;

use reluctant_core::{GrowthError, ParseAlgorithmError, SortError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("token {index} (`{token}`) is not a 64-bit integer")]
    Parse { index: usize, token: String },
    #[error(transparent)]
    UnknownAlgorithm(#[from] ParseAlgorithmError),
    #[error(transparent)]
    Sort(#[from] SortError),
    #[error(transparent)]
    Growth(#[from] GrowthError),
    #[error("bench CSV: {0}")]
    Schema(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Sort(SortError::BudgetExceeded(_)) => ExitCode::from(2),
            _ => ExitCode::from(1),
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Schema(e.to_string())
    }
}
