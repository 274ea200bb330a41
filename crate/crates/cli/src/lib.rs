//! Command-line front end for the `majorana` crate.
//!
//! Commands read state files (JSON, `{"d": 3, "c": [[re, im], ...]}` or an
//! array of them) and write one JSON document per state. `verify` runs the
//! oracle cross-checks and writes one JSON line per check.

pub mod commands;
pub mod document;
pub mod json;
pub mod state_file;
pub mod verify;

use std::io;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const CHECK_FAILED: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const ROOT_FINDING: u8 = 3;
    pub const SIZE_LIMIT: u8 = 4;
    pub const GEOMETRY: u8 = 5;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] majorana::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0} verification check(s) failed")]
    VerifyFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use majorana::Error as E;
        match self {
            CliError::VerifyFailed(_) => exit::CHECK_FAILED,
            CliError::Core(E::RootFindingFailed { .. }) => exit::ROOT_FINDING,
            CliError::Core(E::SizeLimit(_)) => exit::SIZE_LIMIT,
            CliError::Core(
                E::StarsTooClose { .. }
                | E::StarAtInfinity
                | E::DegenerateRotation(_)
                | E::InvalidStep(_),
            ) => exit::GEOMETRY,
            _ => exit::USAGE,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
