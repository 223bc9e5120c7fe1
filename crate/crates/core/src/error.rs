use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid group parameter: {0}")]
    InvalidParameter(String),

    #[error("group closure exceeded {cap} elements; the generator set is wrong")]
    ClosureOverflow { cap: usize },

    #[error("group table violates the group axioms: {0}")]
    NotAGroup(String),

    #[error("element index {index} out of range for a group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },

    #[error("action is not a group action: {0}")]
    InvalidAction(String),

    #[error("invalid tuple instance: {0}")]
    InvalidInstance(String),

    #[error("invalid Helly witness: {0}")]
    InvalidWitness(String),

    #[error("no n <= {cap} satisfies the Helly property; cap must be at least mu + 1")]
    OracleCapTooSmall { cap: usize },

    #[error("the zero form has no root structure")]
    ZeroForm,

    #[error("binary form error: {0}")]
    Form(String),

    #[error("weight matrix error: {0}")]
    Weights(String),

    #[error("unsupported field size {0}; expected a prime power q <= 9")]
    UnsupportedField(usize),

    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
