use std::io;

use thiserror::Error;

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] superq::Error),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("i/o error: {0}")]
    Io(#[from] io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 1 for failed checks and I/O, 2 for anything the caller got wrong.
    pub fn exit_code(&self) -> u8 {
        use superq::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(e) => match e {
                E::InvalidDimension { .. }
                | E::TruncationInsufficient { .. }
                | E::LevelOutOfRange { .. }
                | E::UnsupportedLevel(_)
                | E::SingularParameter
                | E::DegeneratePoint
                | E::Domain { .. } => 2,
                E::DimensionMismatch { .. }
                | E::NotNormalized { .. }
                | E::NumericalConsistency { .. }
                | E::Discrepancy { .. } => 1,
            },
            CliError::Verification(_) | CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => 1,
        }
    }
}
