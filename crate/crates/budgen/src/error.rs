use operad_core::OperadError;
use series::SeriesError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BudError {
    #[error("invalid bud generating system: {0}")]
    Invalid(String),
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
    #[error("system file: {0}")]
    Format(String),
    #[error(transparent)]
    Operad(#[from] OperadError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

impl BudError {
    /// `true` when the error comes from a computation that would not
    /// terminate (rules of arity one that are not finitely factorizing).
    pub fn is_divergence(&self) -> bool {
        matches!(self, BudError::Series(SeriesError::Divergence(_)))
    }
}
