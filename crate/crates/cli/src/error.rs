use projmetric::GeometryError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Geometry(#[from] GeometryError),
    #[error("{0}")]
    Unsupported(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 2 for unreadable input, 4 for numerical instability, 3 for any other
    /// geometric failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io(_) => 2,
            CliError::Geometry(GeometryError::NumericallyUnstable) => 4,
            CliError::Geometry(_) | CliError::Unsupported(_) => 3,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
