use std::fmt;
use std::process::ExitCode;

use tope_committees::committees::CommitteeError;
use tope_committees::farey::FareyError;
use tope_committees::om::OmError;
use tope_committees::schemes::SchemeError;

/// Failure classes, one per exit status.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags or arguments not caught by the parser.
    Usage(String),
    /// Input that violates a documented invariant.
    Input(String),
    /// The verifier's hypothesis does not hold for this input.
    Hypothesis,
    /// Work refused by a resource guard.
    Guard(String),
    /// A verification check failed; details already printed.
    Failed,
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Usage(_) => 1,
            CliError::Input(_) => 2,
            CliError::Hypothesis => 3,
            CliError::Guard(_) => 4,
            CliError::Failed => 5,
        })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Input(m) => write!(f, "error: {m}"),
            CliError::Hypothesis => write!(f, "hypothesis not met"),
            CliError::Guard(m) => write!(f, "error: {m}"),
            CliError::Failed => write!(f, "verification failed"),
        }
    }
}

impl From<FareyError> for CliError {
    fn from(e: FareyError) -> Self {
        match e {
            FareyError::OracleGuard { .. } => CliError::Guard(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<OmError> for CliError {
    fn from(e: OmError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<CommitteeError> for CliError {
    fn from(e: CommitteeError) -> Self {
        match e {
            CommitteeError::Guard { .. } => CliError::Guard(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<SchemeError> for CliError {
    fn from(e: SchemeError) -> Self {
        match e {
            SchemeError::Guard { .. } => CliError::Guard(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}
