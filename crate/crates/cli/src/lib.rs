// SPDX-License-Identifier: Apache-2.0

//! Command-line front end for `einkahler-core`: input parsing, JSON reports and
//! certificates, and the acceptance suite.

use std::fmt;

pub mod certificate;
pub mod commands;
pub mod input;
pub mod report;
pub mod suite;

/// Errors that are the caller's fault; the binary exits with status 2.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Core(einkahler_core::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => f.write_str(msg),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<einkahler_core::Error> for CliError {
    fn from(e: einkahler_core::Error) -> Self {
        CliError::Core(e)
    }
}
