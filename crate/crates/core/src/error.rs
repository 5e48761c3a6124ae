use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("part length must be between 1 and 255, got {0}")]
    InvalidLength(usize),

    #[error("bound must be positive")]
    EmptyRange,

    #[error("refusing to build {requested} entries (cap is {cap})")]
    TooLarge { requested: u64, cap: u64 },

    #[error("{n} is outside the computed range 1..={n_max}")]
    OutOfRange { n: u64, n_max: u64 },

    #[error("{0} is not primitive")]
    NotPrimitive(u64),

    #[error("sifting set element {0} is smaller than 2")]
    InvalidSiftElement(u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("expected distinct primes, got {0} twice")]
    SamePrime(u64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("exponent {exponent} exceeds the exponent table range {range}")]
    ExponentOutOfRange { exponent: u32, range: u64 },

    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },

    #[error("sequence gaps must exceed 1 (terms {prev} and {next})")]
    GapTooSmall { prev: u64, next: u64 },

    #[error("b-file line {line}: {reason}")]
    BFileParse { line: usize, reason: String },

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
