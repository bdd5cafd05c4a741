use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Variants split into two families: malformed input (`Parse*`) and
/// well-formed input outside an operation's domain. The CLI maps them to
/// different exit codes through [`Error::is_parse`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("{m} is divisible by {ell}")]
    DivisibleByEll { m: String, ell: u64 },
    #[error("{0} is not in Z[1/l]")]
    NotEllRational(String),
    #[error("homothety ratio must be nonzero")]
    ZeroRatio,
    #[error("empty digit window [{lo}, {hi})")]
    EmptyWindow { lo: i64, hi: i64 },
    #[error("digit {digit} out of range for base {ell}")]
    InvalidDigit { digit: u64, ell: u64 },
    #[error("empty periodic tail")]
    EmptyTail,
    #[error("real tail repeats the digit l-1 forever")]
    MaxDigitRealTail,
    #[error("invalid cylinder: {0}")]
    InvalidCylinder(String),
    #[error("expected base {expected}, found base {found}")]
    PrimeMismatch { expected: u64, found: u64 },
    #[error("argument {0} is out of range")]
    OutOfRange(String),
}

impl Error {
    pub(crate) fn parse(what: &'static str, input: &str) -> Self {
        Error::Parse {
            what,
            input: input.to_string(),
        }
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::ZeroDenominator(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
