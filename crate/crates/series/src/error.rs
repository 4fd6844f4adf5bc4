use operad_core::OperadError;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("truncation bounds differ: {0} and {1}")]
    BoundMismatch(usize, usize),
    #[error("divergence: {0}")]
    Divergence(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error(transparent)]
    Operad(#[from] OperadError),
}
