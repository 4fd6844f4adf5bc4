use thiserror::Error;

/// Failures raised by operad operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperadError {
    #[error("position {position} is out of range for an element of arity {arity}")]
    PositionOutOfRange { position: usize, arity: usize },

    #[error("composition undefined at position {position}: input color {expected} differs from output color {found}")]
    CompositionUndefined {
        position: usize,
        expected: String,
        found: String,
    },

    #[error("expected {expected} operands for a full composition, got {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("unknown color {0}")]
    UnknownColor(String),

    #[error("incompatible operands: {0}")]
    Incompatible(String),

    #[error("cannot parse element {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("invalid signature: {0}")]
    Signature(String),
}

impl OperadError {
    pub fn parse(input: &str, reason: impl Into<String>) -> Self {
        OperadError::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}
