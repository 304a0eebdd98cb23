use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A ring axiom fails; `witness` holds the offending element triple
    /// (unused slots are zero).
    #[error("ring axiom violated: {axiom} fails at {witness:?}")]
    AxiomViolation {
        axiom: &'static str,
        witness: (usize, usize, usize),
    },

    #[error("order {order} exceeds the {which} bound {bound}")]
    OrderBound {
        which: &'static str,
        order: usize,
        bound: usize,
    },

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("malformed ring file: {0}")]
    RingFile(String),

    #[error("set is not multiplicatively closed: {a} * {b} falls outside")]
    NotMultiplicative { a: usize, b: usize },

    #[error("multiplicative set must contain 1 and exclude 0")]
    ZeroInSet,

    #[error("multiplicative closure reaches zero: {a} * {b} = 0")]
    ZeroInClosure { a: usize, b: usize },

    #[error("set is not a left denominator set")]
    NotDenominator,

    #[error("ideal is not prime")]
    NotPrime,

    #[error("ring was not built as a direct product")]
    NotAProduct,

    #[error("element index {index} out of range for ring of order {order}")]
    ElementOutOfRange { index: usize, order: usize },

    /// Two computations that must agree did not. Always a bug.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("manifest error: {0}")]
    Manifest(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Inconsistency(_) => 3,
            _ => 2,
        }
    }
}

/// Bail out with [`Error::Inconsistency`] unless the condition holds.
macro_rules! ensure_consistent {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Err($crate::error::Error::Inconsistency(format!($($arg)*)));
        }
    };
}
pub(crate) use ensure_consistent;
