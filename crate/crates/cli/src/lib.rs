//! Command implementations behind the `rmgb` binary.
//!
//! Every command returns its stdout text and exit code instead of printing,
//! so the binary stays a thin shell and the commands can be tested directly.

pub mod commands;
pub mod selftest;
pub mod sim;

use thiserror::Error;

pub use commands::{
    cmd_basis, cmd_decode, cmd_divide, cmd_encode, cmd_groebner_check, BasisKind,
};
pub use selftest::cmd_selftest;
pub use sim::{cmd_simulate, simulate, SimMode, SimReport, TrialRow};

pub const EXIT_OK: i32 = 0;
/// The checked property does not hold (non-Groebner basis, failing self-test).
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DECODE_FAILURE: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] rm_groebner::Error),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        EXIT_INPUT
    }
}

/// Text for stdout plus the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

impl Output {
    pub fn ok(stdout: impl Into<String>) -> Self {
        Output { stdout: stdout.into(), code: EXIT_OK }
    }
}
