use thiserror::Error;

/// Errors shared across the library. Degree-window violations are always
/// reported loudly instead of silently truncating a result.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid prime {0}: need a prime p with 2 <= p < 2^31")]
    InvalidPrime(u64),

    #[error("truncation exceeded: {context} needs internal degree {needed} but the window ends at {limit}")]
    TruncationExceeded {
        context: String,
        needed: i64,
        limit: i64,
    },

    #[error("relation is not homogeneous: {0}")]
    NonHomogeneousRelation(String),

    #[error("relation degree too low ({got}): relations must have degree >= 2")]
    RelationDegreeTooLow { got: i64 },

    #[error("element is not homogeneous: {0}")]
    NonHomogeneousElement(String),

    #[error("matrices do not form a complex: d_out * d_in is nonzero")]
    NotAComplex,

    #[error("map is not a chain map: fails to commute with differentials at (n={n}, degree={degree})")]
    NotAChainMap { n: i64, degree: i64 },

    #[error("incompatible degree scale: {0}")]
    IncompatibleDegreeScale(String),

    #[error("homomorphism does not kill relation `{relation}`")]
    RelationNotKilled { relation: String },

    #[error("image of variable `{var}` must be homogeneous of degree {expected}, got {got}")]
    WrongImageDegree {
        var: String,
        expected: i64,
        got: String,
    },

    #[error("window too small: estimator needs at least {needed} certified tail points, got {got}")]
    WindowTooSmall { needed: usize, got: usize },

    #[error("relation set is not a regular sequence: Koszul homology alive in positive degree {0}")]
    NotCI(usize),

    #[error("element set is not regular on the module: Koszul homology alive in degree {0}")]
    NotRegularSet(usize),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("unknown reference `{name}` at line {line}")]
    UnknownReference { name: String, line: usize },

    #[error("validation error: {0}")]
    Validation(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn truncation(context: impl Into<String>, needed: i64, limit: i64) -> Self {
        Error::TruncationExceeded {
            context: context.into(),
            needed,
            limit,
        }
    }
}
