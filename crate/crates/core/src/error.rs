use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truth table of arity {arity} needs {expected} bits, got {actual}")]
    BitLength {
        arity: u32,
        expected: usize,
        actual: usize,
    },

    #[error("invalid truth table: {0}")]
    InvalidTable(String),

    #[error("a function system needs at least one member")]
    EmptySystem,

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: u32, found: u32 },

    #[error("{what} is {value}, above the limit of {limit}")]
    ResourceLimit {
        what: &'static str,
        value: u64,
        limit: u64,
    },

    #[error("invalid comparable pair: {0}")]
    InvalidPair(String),

    #[error("invalid chain: {0}")]
    InvalidChain(String),

    #[error("a basis needs at least one non-monotone generator")]
    EmptyBasis,

    #[error("generator {index} is monotone and cannot carry weight")]
    MonotoneGenerator { index: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("gate {gate}: {message}")]
    MalformedCircuit { gate: usize, message: String },

    #[error("circuit has no non-monotone gate to split")]
    NoWeightedGate,

    #[error("system has no jumps, nothing to decompose")]
    AlreadyMonotone,

    #[error("function is not a monotone function of the pool signals")]
    NotExpressible,

    #[error("internal check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn gate(gate: usize, message: impl Into<String>) -> Self {
        Error::MalformedCircuit {
            gate,
            message: message.into(),
        }
    }
}
