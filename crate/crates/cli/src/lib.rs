//! Command-line front end for the graph edge stores.
//!
//! Exit codes: 0 success, 1 usage, 2 parse, 3 vertex range or unsupported
//! query, 4 selftest failure.

pub mod commands;
pub mod edgelist;
pub mod query;

use thiserror::Error;

pub use commands::{run, Cli};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),

    #[error("{path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },

    #[error("{0}")]
    Range(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("selftest failed: {0}")]
    Selftest(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Parse { .. } | CliError::Io { .. } => 2,
            CliError::Range(_) | CliError::Unsupported(_) => 3,
            CliError::Selftest(_) => 4,
        }
    }
}
