use finring::ring::LoadError;
use finring::RingError;

pub const VERIFICATION_FAILED: u8 = 2;
pub const INPUT_ERROR: u8 = 3;
pub const BOUND_EXCEEDED: u8 = 4;

#[derive(Debug)]
pub enum CliError {
    Ring(RingError),
    Io(std::io::Error),
    Json(serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Ring(RingError::ScanBoundExceeded { .. }) => BOUND_EXCEEDED,
            _ => INPUT_ERROR,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Ring(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Json(e) => write!(f, "invalid ring description: {e}"),
        }
    }
}

impl From<RingError> for CliError {
    fn from(e: RingError) -> Self {
        CliError::Ring(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Json(e)
    }
}

impl From<LoadError> for CliError {
    fn from(e: LoadError) -> Self {
        match e {
            LoadError::Json(e) => CliError::Json(e),
            LoadError::Ring(e) => CliError::Ring(e),
        }
    }
}
