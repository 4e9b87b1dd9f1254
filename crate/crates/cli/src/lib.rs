//! Library half of the `sigma` command-line tool.

pub mod commands;
pub mod report;
pub mod verify;

use std::path::{Path, PathBuf};

use sigma_core::{BitstringError, Error, Graph, ParseError};

pub use report::{Failure, Scope, VerificationReport};

/// Exit codes shared by every subcommand.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const FAILURE: i32 = 1;
    pub const INPUT: i32 = 2;
    pub const CAPACITY: i32 = 3;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("bad configuration: {0}")]
    Bitstring(#[from] BitstringError),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::Capacity { .. }) => exit::CAPACITY,
            _ => exit::INPUT,
        }
    }
}

pub fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Graph::parse(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}
