use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter `{field}`: {reason}")]
    InvalidParam { field: &'static str, reason: String },

    #[error("spin must be 0 or 1/2, got {0}")]
    InvalidSpin(f64),

    #[error("nu must be 1/4 or 3/4, got {0}")]
    InvalidNu(String),

    #[error("argument {arg} = {value} outside the domain: {reason}")]
    Domain {
        arg: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("series did not converge after {terms} terms")]
    NonConvergence { terms: usize },

    #[error("quadrature did not reach tolerance {tol:e} (estimate {estimate:e}) within {intervals} intervals")]
    Quadrature { tol: f64, estimate: f64, intervals: usize },

    #[error("oscillator frequency {given} is not the dual frequency {expected} of level n = {n}")]
    FrequencyMismatch { given: f64, expected: f64, n: u32 },

    #[error("energy bracket [{lo}, {hi}] does not change the matching sign")]
    BracketNoSignChange { lo: f64, hi: f64 },

    #[error("converged eigenfunction has {found} nodes, expected {expected}")]
    NodeCount { expected: u32, found: u32 },

    #[error("grid: {0}")]
    Grid(String),

    #[error("trivial function: all samples are zero")]
    TrivialFunction,

    #[error("{0}")]
    Solver(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(field: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParam {
        field,
        reason: reason.into(),
    }
}
