//! Unified error type for the whole crate.
//!
//! Every fallible operation returns [`Result`].  Errors carry a stable
//! machine-readable category (see [`Error::category`]) so that callers — in
//! particular the command-line driver — can report failures uniformly as
//! `error: <category>: <message>`.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// All error conditions raised by this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Dimension or field mismatch between operands.
    #[error("{0}")]
    Shape(String),
    /// A matrix required to be invertible is singular.
    #[error("{0}")]
    Singular(String),
    /// An enumeration or order computation exceeded its configured cap.
    #[error("{0}")]
    CapExceeded(String),
    /// The requested field (characteristic/degree combination) is not supported.
    #[error("{0}")]
    UnsupportedField(String),
    /// An element whose order is divisible by the field characteristic was
    /// passed where a p-regular element is required.
    #[error("{0}")]
    PSingular(String),
    /// An argument lies outside the operation's domain.
    #[error("{0}")]
    Domain(String),
    /// Division by zero (or inversion of zero).
    #[error("{0}")]
    DivisionByZero(String),
    /// An index is out of range.
    #[error("{0}")]
    Index(String),
    /// Program/argument arity mismatch.
    #[error("{0}")]
    Arity(String),
    /// Text could not be parsed; `line` is 1-based.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// Generator-name restriction violated (names must be prefix-free).
    #[error("{0}")]
    Name(String),
    /// A bounded search was exhausted without success.
    #[error("{0}")]
    NotFound(String),
    /// A seed vector precondition failed (e.g. zero seed).
    #[error("{0}")]
    Seed(String),
    /// A subspace claimed to be invariant is not.
    #[error("{0}")]
    Invariance(String),
    /// The canonical-seed requirement of the conjugacy certificate failed.
    #[error("{0}")]
    NonCanonicalSeed(String),
    /// A randomized search ran out of attempts before certifying a result.
    #[error("{0}")]
    Budget(String),
    /// A membership precondition failed (e.g. claimed subgroup is not one).
    #[error("{0}")]
    Membership(String),
    /// A class map required to be determined has ambiguous entries.
    #[error("{0}")]
    MapUndetermined(String),
    /// No class fusion is compatible with the given table heads.
    #[error("{0}")]
    ImpossibleFusion(String),
    /// Constraint propagation emptied a candidate set.
    #[error("{0}")]
    Inconsistency(String),
    /// A table head is missing required power maps.
    #[error("{0}")]
    IncompleteHead(String),
    /// Two class functions belong to different table heads.
    #[error("{0}")]
    HeadMismatch(String),
    /// A documented operation precondition was violated.
    #[error("{0}")]
    Precondition(String),
    /// A congruence completion could not certify uniqueness.
    #[error("{0}")]
    UnderDetermined(String),
    /// A table construction failed its self-checks.
    #[error("{0}")]
    Construction(String),
    /// A file or structure failed validation; the message names the rule.
    #[error("{0}")]
    Validation(String),
    /// An unknown class label was used.
    #[error("{0}")]
    Label(String),
    /// Class identification failed ("wrong rank" / "wrong trace" /
    /// "wrong element order").
    #[error("{0}")]
    Identification(String),
    /// Underlying I/O failure.
    #[error("{0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable category slug for this error.
    pub fn category(&self) -> &'static str {
        match self {
            Error::Shape(_) => "shape",
            Error::Singular(_) => "singular",
            Error::CapExceeded(_) => "cap-exceeded",
            Error::UnsupportedField(_) => "unsupported-field",
            Error::PSingular(_) => "p-singular",
            Error::Domain(_) => "domain",
            Error::DivisionByZero(_) => "division-by-zero",
            Error::Index(_) => "index",
            Error::Arity(_) => "arity",
            Error::Parse { .. } => "parse",
            Error::Name(_) => "name",
            Error::NotFound(_) => "not-found",
            Error::Seed(_) => "seed",
            Error::Invariance(_) => "invariance",
            Error::NonCanonicalSeed(_) => "non-canonical-seed",
            Error::Budget(_) => "budget",
            Error::Membership(_) => "membership",
            Error::MapUndetermined(_) => "map",
            Error::ImpossibleFusion(_) => "impossible-fusion",
            Error::Inconsistency(_) => "inconsistency",
            Error::IncompleteHead(_) => "incomplete-head",
            Error::HeadMismatch(_) => "head-mismatch",
            Error::Precondition(_) => "precondition",
            Error::UnderDetermined(_) => "under-determined",
            Error::Construction(_) => "construction",
            Error::Validation(_) => "validation",
            Error::Label(_) => "label",
            Error::Identification(_) => "identification",
            Error::Io(_) => "io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
