use std::path::PathBuf;

use thiserror::Error;

use crate::edgelist::ParseError;

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DISCONNECTED: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("cannot read {path}: {source}")]
    Input {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write output: {0}")]
    Output(#[from] std::io::Error),
    #[error(transparent)]
    Graph(#[from] agglo_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use agglo_core::Error as E;
        match self {
            CliError::Usage(_) | CliError::Parse { .. } | CliError::Input { .. } => EXIT_USAGE,
            CliError::Output(_) => EXIT_FAILURE,
            CliError::Graph(e) => match e {
                E::Disconnected { .. } => EXIT_DISCONNECTED,
                E::Overflow { .. } | E::DivisionByZero => EXIT_FAILURE,
                _ => EXIT_USAGE,
            },
        }
    }
}
