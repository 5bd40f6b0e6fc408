use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] quasiorth::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    /// Process exit status for this error. Verification failures are not
    /// errors and exit with 1; everything here is a usage or input problem.
    pub fn exit_code(&self) -> u8 {
        2
    }
}
