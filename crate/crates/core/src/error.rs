use std::fmt;

/// Errors raised by the library. Variant names double as the error names
/// surfaced by the command-line tool.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("LengthMismatch: expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("EntryOutOfRange: entry {value} at position {position} is not below order {order}")]
    EntryOutOfRange { position: usize, value: usize, order: usize },
    #[error("CapExceeded: {what} needs {size}, cap is {cap}")]
    CapExceeded { what: &'static str, size: u128, cap: u128 },
    #[error("NotEssentiallyPolyadic: {first:?} and {second:?} have the same components but different outputs")]
    NotEssentiallyPolyadic { first: Vec<usize>, second: Vec<usize> },
    #[error("ArityMismatch: expected arity {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("NotClosed: f{tuple:?} leaves the subset")]
    NotClosed { tuple: Vec<usize> },
    #[error("NotPermutation: {0}")]
    NotPermutation(String),
    #[error("DomainError: {0}")]
    DomainError(String),
    #[error("FormulaMismatch: {0}")]
    FormulaMismatch(String),
    #[error("NotDivisible: {divisor} does not divide {value}")]
    NotDivisible { divisor: u64, value: String },
    #[error("BadMultiplier: {0}")]
    BadMultiplier(String),
    #[error("NotAGroup: {0}")]
    NotAGroup(String),
    #[error("ContainsIdentity: {0}")]
    ContainsIdentity(String),
    #[error("TooLarge: {0}")]
    TooLarge(String),
    #[error("NotAdmissible: no strongly fair {n}-ary selection game on {m} items (need m != 1 and n below the least prime divisor of m)")]
    NotAdmissible { m: usize, n: usize },
    #[error("InvalidSignFunction: {0}")]
    InvalidSignFunction(String),
    #[error("InvalidChirality: {0}")]
    InvalidChirality(String),
    #[error("InvalidPointing: {0}")]
    InvalidPointing(String),
    #[error("ArityTooLarge: {0}")]
    ArityTooLarge(String),
    #[error("DegenerateArity: {0}")]
    DegenerateArity(String),
    #[error("NotPrime: {0}")]
    NotPrime(u64),
    #[error("NotHypertournamentMagma: {0}")]
    NotHypertournamentMagma(String),
    #[error("BadArity: {0}")]
    BadArity(String),
    #[error("ArityNot2: found arity {0}")]
    ArityNot2(usize),
    #[error("BadModulus: {0}")]
    BadModulus(String),
    #[error("ConflictingConstraints: {0}")]
    ConflictingConstraints(String),
    #[error("NotAChain: {0}")]
    NotAChain(String),
    #[error("NotALattice: {0}")]
    NotALattice(String),
    #[error("Parse: line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    /// The bare variant name, e.g. `NotAdmissible`.
    pub fn name(&self) -> &'static str {
        use Error::*;
        match self {
            LengthMismatch { .. } => "LengthMismatch",
            EntryOutOfRange { .. } => "EntryOutOfRange",
            CapExceeded { .. } => "CapExceeded",
            NotEssentiallyPolyadic { .. } => "NotEssentiallyPolyadic",
            ArityMismatch { .. } => "ArityMismatch",
            NotClosed { .. } => "NotClosed",
            NotPermutation(_) => "NotPermutation",
            DomainError(_) => "DomainError",
            FormulaMismatch(_) => "FormulaMismatch",
            NotDivisible { .. } => "NotDivisible",
            BadMultiplier(_) => "BadMultiplier",
            NotAGroup(_) => "NotAGroup",
            ContainsIdentity(_) => "ContainsIdentity",
            TooLarge(_) => "TooLarge",
            NotAdmissible { .. } => "NotAdmissible",
            InvalidSignFunction(_) => "InvalidSignFunction",
            InvalidChirality(_) => "InvalidChirality",
            InvalidPointing(_) => "InvalidPointing",
            ArityTooLarge(_) => "ArityTooLarge",
            DegenerateArity(_) => "DegenerateArity",
            NotPrime(_) => "NotPrime",
            NotHypertournamentMagma(_) => "NotHypertournamentMagma",
            BadArity(_) => "BadArity",
            ArityNot2(_) => "ArityNot2",
            BadModulus(_) => "BadModulus",
            ConflictingConstraints(_) => "ConflictingConstraints",
            NotAChain(_) => "NotAChain",
            NotALattice(_) => "NotALattice",
            Parse { .. } => "Parse",
        }
    }

    pub(crate) fn parse(line: usize, message: impl fmt::Display) -> Self {
        Error::Parse { line, message: message.to_string() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
