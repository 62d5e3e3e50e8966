use thiserror::Error;

/// Errors raised by the exact-arithmetic, table and verification layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("basis too small: polynomial of degree {degree} needs at least {degree} nodes, got {nodes}")]
    BasisTooSmall { degree: usize, nodes: usize },

    #[error("series has nonzero constant term {0}")]
    NonzeroConstantTerm(String),

    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,

    #[error("psi index {index} out of range: custom sequence defines values up to {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("degenerate \u{3c8}-sequence: value at n = {0} is zero")]
    DegenerateSequence(usize),

    #[error("partial fractions require distinct nodes (repeated value {value} at indices {first} and {second})")]
    RepeatedNodes { value: String, first: usize, second: usize },

    #[error("oracle limit: n = {n} exceeds the enumeration guard {limit}")]
    OracleLimit { n: usize, limit: usize },

    #[error("epsilon did not converge within {terms} terms")]
    EpsilonNotConverged { terms: usize },

    #[error("unknown suite `{id}`; registered suites: {registered}")]
    UnknownSuite { id: String, registered: String },

    #[error("invalid rational `{0}`")]
    ParseRational(String),

    #[error("invalid \u{3c8}-spec `{0}`: expected `classical`, `q:<rational>` or `custom:<path>`")]
    ParsePsiSpec(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Malformed(e.to_string())
    }
}
