use thiserror::Error;

use crate::report::CheckReport;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("algebra has no `{0}` operation")]
    MissingOp(String),
    #[error("bracket `{0}` is not a Lie bracket")]
    NotLie(String),
    #[error("`{0}` is not a pre-Lie product")]
    NotPreLie(String),
    #[error("precondition failed: {what}")]
    Precondition {
        what: String,
        report: Box<CheckReport>,
    },
    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub fn precondition(what: impl Into<String>, report: CheckReport) -> Self {
        Error::Precondition {
            what: what.into(),
            report: Box::new(report),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
