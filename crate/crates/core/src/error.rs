use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("qubit count mismatch: expected {expected}, found {found}")]
    QubitCountMismatch { expected: usize, found: usize },

    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("duplicate index {0}")]
    DuplicateIndex(usize),

    /// `position` is 1-based.
    #[error("invalid Pauli character {found:?} at position {position}")]
    PauliParse { position: usize, found: char },

    #[error("empty Pauli string")]
    EmptyPauli,

    #[error(transparent)]
    Validation(#[from] ValidationError),

    #[error("{name} = {value} out of range [{min}, {max}]")]
    OutOfRange {
        name: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("invalid channel: {0}")]
    InvalidChannel(String),

    #[error("trial count must be positive")]
    ZeroTrials,

    /// Line and column are 1-based.
    #[error("line {line}, column {column}: {message}")]
    CodeFile {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{0}")]
    Io(String),

    #[error("enumeration exceeded budget of {budget}")]
    BudgetExhausted { budget: u64 },
}

/// One problem found while validating a generator list. Indices are 0-based
/// internally and printed 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NoGenerators,
    MixedLengths {
        row: usize,
        expected: usize,
        found: usize,
    },
    NonCommutingGenerators(usize, usize),
    /// Rows that lie in the span of the rows before them.
    DependentGenerators(Vec<usize>),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoGenerators => write!(f, "no generators"),
            Violation::MixedLengths {
                row,
                expected,
                found,
            } => write!(
                f,
                "generator {} acts on {found} qubits, expected {expected}",
                row + 1
            ),
            Violation::NonCommutingGenerators(i, j) => {
                write!(f, "generators {} and {} anticommute", i + 1, j + 1)
            }
            Violation::DependentGenerators(rows) => {
                let list: Vec<String> = rows.iter().map(|r| (r + 1).to_string()).collect();
                write!(f, "dependent generators: {}", list.join(", "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ValidationError {
    pub violations: Vec<Violation>,
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid check matrix: ")?;
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
