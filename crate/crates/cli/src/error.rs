use krawtchouk_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Malformed flags or flag values.
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Dimension(String),
    /// `p` or `lambda` outside the parameter domain.
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Verification(String),
    /// Unreadable or unwritable files, and malformed vector files.
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Dimension(_) => 3,
            CliError::Domain(_) => 4,
            CliError::Io(_) => 5,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(err: CoreError) -> Self {
        let msg = err.to_string();
        match err {
            CoreError::ProbabilityOutOfRange
            | CoreError::ZeroLambda
            | CoreError::UnsupportedParams(_) => CliError::Domain(msg),
            CoreError::LengthMismatch { .. } => CliError::Dimension(msg),
            CoreError::IndexOutOfRange { .. } => CliError::Usage(msg),
            CoreError::TooLarge { .. } => {
                CliError::Usage(format!("{msg}; use --route direct or inversion"))
            }
            CoreError::IdentityViolated(_) => CliError::Verification(msg),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Io(err.to_string())
    }
}
