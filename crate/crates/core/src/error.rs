use std::fmt;

use thiserror::Error;

/// Location-tagged parse failure for the circuit and program text formats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} qubits, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("qubit {qubit} out of range 1..={n}")]
    QubitOutOfRange { qubit: usize, n: usize },

    #[error("gate targets must be distinct, got {0} twice")]
    RepeatedTarget(usize),

    #[error("{kind} takes {expected} target(s), got {found}")]
    WrongArity {
        kind: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("{0} is not a Clifford operation on this operand")]
    NonClifford(String),

    #[error("code length must be even, got {0}")]
    OddCodeLength(usize),

    #[error("code length must be at least 4, got {0}")]
    CodeTooSmall(usize),

    #[error("logical index {index} out of range 1..={k}")]
    LogicalIndex { index: usize, k: usize },

    #[error("invalid Pauli literal {0:?}")]
    PauliLiteral(String),

    #[error("parse error at {0}")]
    Parse(ParseError),

    #[error("enumeration too large: {0}")]
    TooLarge(String),

    #[error("simulation size cap exceeded: {qubits} qubits > {cap}")]
    SizeCap { qubits: usize, cap: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse(e)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
