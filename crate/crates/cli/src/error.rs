use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] srg_core::Error),
    #[error("cannot write {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("malformed document: {0}")]
    Parse(#[from] serde_json::Error),
}

impl CliError {
    /// 2 for bad input, 3 for I/O failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Core(_) | CliError::Parse(_) => 2,
            CliError::Io { .. } | CliError::Read { .. } => 3,
        }
    }

    pub fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io { path: path.display().to_string(), source }
    }

    pub fn missing(flag: &str) -> Self {
        CliError::Input(format!("missing required flag --{flag}"))
    }
}

pub type CliResult<T> = Result<T, CliError>;
