use thiserror::Error;

/// Errors raised by the closed-form kernel and the disk model.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("non-finite input for {0}")]
    NonFinite(&'static str),
    #[error("{what} out of domain: {detail}")]
    Domain { what: &'static str, detail: String },
    #[error("exponent argument {arg} exceeds the overflow guard {limit}")]
    OutOfRange { arg: f64, limit: f64 },
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("insufficient givens: {0}")]
    Insufficient(String),
    #[error("contradictory givens: {0}")]
    Contradictory(String),
    #[error("no such figure: {0}")]
    NoSuchFigure(String),
}

pub type Result<T> = std::result::Result<T, GeometryError>;

pub(crate) fn domain(what: &'static str, detail: impl Into<String>) -> GeometryError {
    GeometryError::Domain { what, detail: detail.into() }
}
