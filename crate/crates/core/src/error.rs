use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what}: `{token}`")]
    Parse { what: &'static str, token: String },

    #[error("invalid modulus {0}: need a polynomial of degree >= 1 with nonzero constant term")]
    InvalidModulus(String),

    #[error("elements live in different algebras")]
    MixedAlgebras,

    #[error("basis vector v_{index} does not exist in {module}")]
    UndefinedIndex { module: String, index: i64 },

    #[error("zero is not allowed here: {0}")]
    Zero(&'static str),

    #[error("functional is not annihilated by {0}")]
    NotAnnihilated(String),

    #[error("functional is not Harish-Chandra")]
    NotHarishChandra,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("element is not homogeneous")]
    NotHomogeneous,
}

pub type Result<T> = std::result::Result<T, Error>;
