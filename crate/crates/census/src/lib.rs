//! Census, audit and example-reproduction commands behind the `quadpoints` binary.

pub mod commands;
pub mod config;
pub mod report;

use thiserror::Error;

pub use config::{Format, RunConfig};
pub use report::Report;

#[derive(Debug, Error)]
pub enum CensusError {
    /// Bad flags, unreadable or malformed input files.
    #[error("{0}")]
    Input(String),
    #[error("cannot write {path}: {source}")]
    Output {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Cover(#[from] quadpoints_core::covers::CoverError),
}

impl CensusError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}
