use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A type string or count vector that does not describe a multidegree.
    #[error("malformed type: {0}")]
    MalformedType(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("outside domain: {0}")]
    Domain(String),

    /// A closed form produced a non-integral quotient. Always a transcription bug.
    #[error("non-integral quotient in {context}: {numerator} is not divisible by {denominator}")]
    NotIntegral {
        context: &'static str,
        numerator: String,
        denominator: String,
    },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::MalformedType(_) => 2,
            Error::Precondition(_) | Error::Domain(_) => 3,
            Error::NotIntegral { .. } | Error::Internal(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
