use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("linear system has no solution")]
    NoSolution,

    #[error("not a character of an object: {0}")]
    NotACharacter(String),

    #[error("not the character of a module: {0}")]
    NotAModuleCharacter(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("unsupported case: {0}")]
    Unsupported(String),

    #[error("verification failure: {0}")]
    VerificationFailure(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
