use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division is not exact: {0}")]
    NonExactDivision(String),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("cannot evaluate a negative power of zero")]
    ZeroBase,

    #[error("cannot parse polynomial {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("unknown stratum {0:?}")]
    UnknownStratum(String),

    #[error("unknown puncture label {0:?}")]
    UnknownPunctureLabel(String),

    #[error("word contains a P tube but the datum has no identity tube")]
    MissingIdentityTube,

    #[error("invalid datum: {0}")]
    InvalidDatum(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("generated group exceeds {limit} elements")]
    GroupTooLarge { limit: usize },

    #[error("element subset is not closed under conjugation: {0}")]
    NotConjugationClosed(String),

    #[error("enumeration needs {needed} group operations, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::InvalidInput(e.to_string())
    }
}
