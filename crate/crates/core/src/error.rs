use thiserror::Error;

/// Broad failure class, used by the command-line front end to pick an exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// An input violated a mathematical precondition.
    Domain,
    /// A computation would exceed a configured size limit.
    Capacity,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument must be nonzero")]
    Zero,
    #[error("{p} is not prime")]
    NotPrime { p: i64 },
    #[error("{p} must be an odd prime")]
    NotOddPrime { p: i64 },
    #[error("n must be squarefree (got {n})")]
    NotSquarefree { n: i64 },
    #[error("n must not be 0 or 1 (got {n})")]
    TrivialField { n: i64 },
    #[error("r must be a positive integer (got {r})")]
    NonPositiveConductor { r: i64 },
    #[error("ideal generators are all zero")]
    DegenerateIdeal,
    #[error("ideal {0} is not an ideal of this order")]
    ForeignIdeal(String),
    #[error("the ideal must be proper")]
    NotProper,
    #[error("{p} does not divide r = {r} exactly {a} times")]
    WrongExponent { r: i64, p: i64, a: u32 },
    #[error("no finite prediction: kronecker(d_n, {p}) = 1")]
    Unverifiable { p: i64 },
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("invalid field data: {0}")]
    InvalidFields(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("quotient of norm {norm} exceeds the bound {bound}")]
    QuotientTooLarge { norm: u128, bound: u64 },
    #[error("ring of order {order} exceeds the bound {bound}")]
    RingTooLarge { order: u128, bound: u64 },
    #[error("ideal lattice exceeds {cap} ideals")]
    TooManyIdeals { cap: usize },
    #[error("{what} exceeded the cap {cap}")]
    AboveCap { what: &'static str, cap: u32 },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Overflow(_)
            | Error::QuotientTooLarge { .. }
            | Error::RingTooLarge { .. }
            | Error::TooManyIdeals { .. }
            | Error::AboveCap { .. } => ErrorKind::Capacity,
            _ => ErrorKind::Domain,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
