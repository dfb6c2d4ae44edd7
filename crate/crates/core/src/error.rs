use thiserror::Error;

/// Errors produced by the solvers and the verification harness.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("fractional order {0} is outside the open interval (0, 1)")]
    OrderOutOfRange(f64),

    #[error("shift pair needs p != q, got p = q = {0}")]
    EqualShifts(i32),

    #[error("shift pair ({p}, {q}) is not supported here")]
    UnsupportedShifts { p: i32, q: i32 },

    #[error("{what} = {value} is outside {domain}")]
    Domain {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("size mismatch: expected {expected} values, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("weight sequence too short: need {need} entries, have {have}")]
    WeightsTooShort { need: usize, have: usize },

    #[error("tridiagonal system is not diagonally dominant at row {row} (margin {margin:e})")]
    NotDominant { row: usize, margin: f64 },

    #[error("reference grid does not coincide with the solution grid: {0}")]
    GridMismatch(String),

    #[error("step list is not a halving sequence: {0}")]
    NotHalving(String),

    #[error("unknown problem id `{0}`")]
    UnknownProblem(String),

    #[error("invalid problem: {0}")]
    InvalidProblem(String),
}

pub type Result<T> = std::result::Result<T, Error>;
