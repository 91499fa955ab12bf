use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series has the wrong constant term for this operation (expected {expected})")]
    BadConstantTerm { expected: &'static str },

    #[error("minimal recurrence is not integer-monic")]
    NonIntegralRecurrence,

    #[error("insufficient truncation order: need {needed}, have {available}")]
    InsufficientOrder { needed: usize, available: usize },

    #[error("integrality violated in {0}")]
    IntegralityViolation(&'static str),

    #[error("tensor decomposition could not be certified: {0}")]
    DecompositionUnverified(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("enumeration of {needed} points exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("{n} does not divide {m}")]
    NotDivisible { n: u32, m: u32 },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
