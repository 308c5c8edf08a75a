use thiserror::Error;

use crate::parser::ParseError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("assignment has no value for variable `{0}`")]
    MissingVariable(String),

    #[error("variable `{0}` does not occur in the formula")]
    UnknownVariable(String),

    #[error("classical evaluation needs a definite assignment, but `{0}` is unknown")]
    IndefiniteAssignment(String),

    #[error("invalid assignment: {0}")]
    InvalidAssignment(String),

    #[error("{count} variables exceed the enumeration cap of {cap} for {what}")]
    CapExceeded { count: usize, cap: usize, what: &'static str },

    #[error("variable set must not be empty")]
    EmptySet,

    #[error("tableau exceeded the node budget of {0}")]
    NodeBudgetExceeded(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
