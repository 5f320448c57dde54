use thiserror::Error;

use crate::report::CheckReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("malformed rational literal {0:?}")]
    MalformedRational(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("map is not multiplicative: fails on basis pair ({0}, {1})")]
    NotMultiplicative(usize, usize),
    #[error("map is not comultiplicative: fails on basis element {0}")]
    NotComultiplicative(usize),
    #[error("map is not an involution")]
    NotInvolutive,
    #[error("map does not commute with the structure map")]
    NotCommutingWithAlpha,
    #[error("action does not intertwine the structure maps: fails on basis pair ({0}, {1})")]
    IntertwiningFailure(usize, usize),
    #[error("twisting map does not commute with the structure maps")]
    CommutationFailure(Box<CheckReport>),
    #[error("braid condition violated")]
    BraidViolation(Box<CheckReport>),
    #[error("Yetter-Drinfeld condition violated")]
    YdViolation(Box<CheckReport>),
    #[error("precondition failed: {what}")]
    Precondition {
        what: String,
        report: Box<CheckReport>,
    },
    #[error("q must avoid 0, 1 and -1")]
    DegenerateQ,
    #[error("parameter constraint violated: {0}")]
    ParamConstraintViolation(String),
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("name {0:?} is defined twice")]
    DuplicateName(String),
    #[error("invalid task: {0}")]
    BadTask(String),
    #[error("{name:?} is a {found}, expected a {expected}")]
    WrongKind {
        name: String,
        expected: String,
        found: String,
    },
}

impl Error {
    /// Errors caused by the manifest itself rather than by the mathematics it describes.
    pub fn is_semantic(&self) -> bool {
        matches!(
            self,
            Error::UnknownName(_)
                | Error::DuplicateName(_)
                | Error::WrongKind { .. }
                | Error::BadTask(_)
                | Error::DimensionMismatch(_)
                | Error::MalformedRational(_)
                | Error::ZeroDenominator
        )
    }

    pub(crate) fn dims(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }

    pub(crate) fn precondition(what: impl Into<String>, report: CheckReport) -> Self {
        Error::Precondition {
            what: what.into(),
            report: Box::new(report),
        }
    }

    /// Turns a failing report into a precondition error, passes a clean one through.
    pub(crate) fn require(what: &str, report: CheckReport) -> Result<()> {
        if report.passed {
            Ok(())
        } else {
            Err(Error::precondition(what, report))
        }
    }
}
