//! Library surface of the workbench CLI: document parsing, the check
//! registry and report rendering. The binary in `main.rs` is a thin shell
//! over these.

pub mod checks;
pub mod document;
pub mod report;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },

    #[error("{0}")]
    Input(String),

    #[error(transparent)]
    Core(#[from] softgt_core::Error),
}

/// Exit codes: 0 pass, 1 failed assertion or certification, 2 input error,
/// 3 exact-search threshold exceeded.
pub fn exit_code(err: &CliError) -> i32 {
    match err {
        CliError::Parse { .. } | CliError::Input(_) => 2,
        CliError::Core(core) => match core {
            softgt_core::Error::ThresholdExceeded { .. }
            | softgt_core::Error::TooLarge { .. } => 3,
            softgt_core::Error::Certification { .. } => 1,
            _ => 2,
        },
    }
}
