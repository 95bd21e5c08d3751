use crate::parse::ParseError;

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
/// Bad arguments, unreadable input, or a mask outside a command's domain.
pub const EXIT_USAGE: i32 = 3;
/// Two decision procedures contradict each other.
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] maskcheck_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Consistency(_) | CliError::Core(maskcheck_core::Error::OddResidue { .. }) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        }
    }
}
