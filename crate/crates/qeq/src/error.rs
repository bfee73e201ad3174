//! Error types shared across the crate.

use thiserror::Error;

use crate::symbol::Symbol;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("bad token `{0}`")]
    BadToken(String),
    #[error("bad factorization syntax: {0}")]
    BadFactorization(String),
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum QeqError {
    #[error("coefficient map has no assignment for `{0}`")]
    MissingCoefficient(Symbol),
    #[error("coefficient map image for `{0}` must use constants only")]
    NonConstantImage(Symbol),
    #[error("variable `{var}` occurs {count} times, expected exactly 2")]
    NotQuadraticVariable { var: Symbol, count: usize },
    #[error("formal coefficient `{coeff}` occurs {count} times, expected at most 1")]
    RepeatedCoefficient { coeff: Symbol, count: usize },
    #[error("expected an orientable quadratic word")]
    NotOrientable,
    #[error("expected a non-orientable quadratic word")]
    NotNonOrientable,
    #[error("expected a coefficient-free quadratic word")]
    HasCoefficients,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("{0}")]
    Parse(#[from] ParseError),
}

pub type Result<T, E = QeqError> = std::result::Result<T, E>;
