//! CLI error type. Every failure maps to a stable category printed as a
//! single machine-parsable line.

use thiserror::Error;

use ringstore_core::{AlgebraError, ConstructError, ProtocolError, SchemeError, SimError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("scheme invariant violated: {condition}")]
    InvariantViolation { condition: String },
    #[error("{0}")]
    BadArguments(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("scheme is not an ORDSS")]
    NotOrdss,
    #[error("{0}")]
    RingTooShort(String),
    #[error("{0}")]
    FieldTooSmall(String),
    #[error("{0}")]
    InstanceTooLarge(String),
    #[error("{0}")]
    NonTermination(String),
    #[error("{0}")]
    BadIndex(String),
    #[error("{0}")]
    PathBlocked(String),
    #[error("{0}")]
    AnotherNodeFailed(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    /// Stable category token for scripting against stderr.
    pub fn category(&self) -> &'static str {
        match self {
            CliError::Parse { .. } => "ParseError",
            CliError::InvariantViolation { .. } => "InvariantViolation",
            CliError::BadArguments(_) => "BadArguments",
            CliError::Io { .. } => "IoError",
            CliError::NotOrdss => "NotOrdss",
            CliError::RingTooShort(_) => "RingTooShort",
            CliError::FieldTooSmall(_) => "FieldTooSmall",
            CliError::InstanceTooLarge(_) => "InstanceTooLarge",
            CliError::NonTermination(_) => "NonTermination",
            CliError::BadIndex(_) => "BadIndex",
            CliError::PathBlocked(_) => "PathBlockedByFailure",
            CliError::AnotherNodeFailed(_) => "AnotherNodeFailed",
            CliError::Internal(_) => "Internal",
        }
    }
}

impl From<ConstructError> for CliError {
    fn from(e: ConstructError) -> Self {
        match e {
            ConstructError::BadArguments(_) | ConstructError::ShapeError(_) => {
                CliError::BadArguments(e.to_string())
            }
            ConstructError::FieldTooSmall { .. } => CliError::FieldTooSmall(e.to_string()),
            ConstructError::InstanceTooLarge { .. } => CliError::InstanceTooLarge(e.to_string()),
            ConstructError::NonTermination { .. } => CliError::NonTermination(e.to_string()),
            ConstructError::Algebra(inner) => inner.into(),
        }
    }
}

impl From<SchemeError> for CliError {
    fn from(e: SchemeError) -> Self {
        let condition = match &e {
            SchemeError::NotFullRank { .. } => "rank(G) = M".to_string(),
            SchemeError::TooFewNodes { .. } => "n >= ceil(M/alpha)".to_string(),
            SchemeError::PartitionMismatch { .. } => "G has n*alpha columns".to_string(),
            other => other.to_string(),
        };
        CliError::InvariantViolation { condition }
    }
}

impl From<ProtocolError> for CliError {
    fn from(e: ProtocolError) -> Self {
        match e {
            ProtocolError::NotOrdss => CliError::NotOrdss,
            ProtocolError::BadNodeIndex { .. } => CliError::BadIndex(e.to_string()),
            ProtocolError::RingTooShort { .. } => CliError::RingTooShort(e.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<SimError> for CliError {
    fn from(e: SimError) -> Self {
        match e {
            SimError::NotOrdss => CliError::NotOrdss,
            SimError::BadUserIndex { .. } => CliError::BadIndex(e.to_string()),
            SimError::PathBlockedByFailure { .. } => CliError::PathBlocked(e.to_string()),
            SimError::AnotherNodeFailed { .. } => CliError::AnotherNodeFailed(e.to_string()),
            SimError::Protocol(inner) => inner.into(),
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::Internal(e.to_string())
    }
}
