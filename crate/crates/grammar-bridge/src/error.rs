use budgen::BudError;
use operad_core::OperadError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GrammarError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: empty right-hand side (only proper grammars are supported)")]
    EmptyProduction { line: usize },
    #[error("variable {0} is used as an internal node; variables have arity 0")]
    VariableArity(String),
    #[error("symbol {0} is used with different arities")]
    InconsistentArity(String),
    #[error("node {node} has {arity} children, above the arity cap {cap}")]
    CapExceeded { node: String, arity: usize, cap: usize },
    #[error("the axiom {0} is not a bud label")]
    UnknownAxiom(String),
    #[error("the grammar has no productions and no start symbol")]
    NoStart,
    #[error(transparent)]
    Bud(#[from] BudError),
    #[error(transparent)]
    Operad(#[from] OperadError),
}
