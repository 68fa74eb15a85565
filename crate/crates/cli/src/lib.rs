//! Command implementations behind the `narayana` binary. Each command is a
//! pure function from arguments to output text so that tests can call it
//! without spawning a process.

pub mod figure;
pub mod oeis;
pub mod table;
pub mod verify;

use std::path::PathBuf;

use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const MISMATCH: i32 = 1;
    pub const USAGE: i32 = 2;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Path(#[from] narayana::ParseError),
    #[error(transparent)]
    Polyomino(#[from] narayana::PolyominoError),
    #[error(transparent)]
    Series(#[from] narayana::SeriesError),
    #[error(transparent)]
    Enumeration(#[from] narayana::EnumerationError),
    #[error("{0}")]
    Domain(String),
    #[error("{path}: line {line}: {message}")]
    BFile {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("{path}: no data lines")]
    EmptyBFile { path: PathBuf },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}
