use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division: {0}")]
    Division(String),
    #[error("rational function with zero denominator")]
    ZeroDenominator,
    #[error("non-integral exponent with nonzero symbol: {num}/{den}")]
    NonIntegralExponent { num: i64, den: i64 },
    #[error("invalid parameters for {theorem}: {reason}")]
    Schema { theorem: String, reason: String },
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("config: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
