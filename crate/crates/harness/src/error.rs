use std::path::PathBuf;

use thiserror::Error;
use yangian_core::AlgebraError;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown check `{0}` (see --list)")]
    UnknownCheck(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed table file: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl HarnessError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        HarnessError::Io { path: path.into(), source }
    }

    /// Process exit code: 2 for configuration and I/O problems, 1 when a
    /// check could not be carried out.
    pub fn exit_code(&self) -> u8 {
        match self {
            HarnessError::Algebra(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T, E = HarnessError> = std::result::Result<T, E>;
