use budgen::BudError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CountError {
    #[error("divergence: {0}")]
    Divergence(String),
    #[error("no stabilization at degree {bound} after {iterations} iterations")]
    NotStabilized { bound: u32, iterations: usize },
    #[error(transparent)]
    Bud(#[from] BudError),
}

impl CountError {
    /// `true` for computations that would not terminate.
    pub fn is_divergence(&self) -> bool {
        match self {
            CountError::Divergence(_) | CountError::NotStabilized { .. } => true,
            CountError::Bud(e) => e.is_divergence(),
        }
    }
}
