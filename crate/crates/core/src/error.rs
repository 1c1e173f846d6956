use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An index or parameter lies below the smallest value the operation accepts.
    #[error("{what}: value {value} is below the lower bound {min}")]
    Domain {
        what: String,
        value: i64,
        min: i64,
    },

    #[error("empty range: lo = {lo} is greater than hi = {hi}")]
    EmptyRange { lo: i64, hi: i64 },

    #[error("{what}: expected {expected} value, got {value}")]
    Parity {
        what: String,
        expected: &'static str,
        value: i64,
    },

    #[error("invalid recurrence: {0}")]
    InvalidRecurrence(String),

    #[error("unknown sequence tag `{0}`")]
    UnknownSequence(String),

    #[error("unknown identity code `{0}`")]
    UnknownIdentity(String),

    #[error("invalid argument: {0}")]
    Argument(String),
}

impl Error {
    pub(crate) fn domain(what: impl Into<String>, value: i64, min: i64) -> Self {
        Error::Domain {
            what: what.into(),
            value,
            min,
        }
    }
}
