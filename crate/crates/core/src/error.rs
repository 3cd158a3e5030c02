use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A malformed line in an edge-list input.
    #[error("format error at line {line}: {msg}")]
    Format { line: usize, msg: String },

    /// The operation requires a connected graph (or a connected vertex pair).
    #[error("connectivity error: {0}")]
    Disconnected(String),

    /// An exact search was refused because the instance exceeds its cap.
    #[error("size error: n = {n} exceeds the exact-search limit {cap}")]
    TooLarge { n: usize, cap: usize },

    /// A parameter is outside its documented range.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// The input graph does not have the required shape (e.g. not a tree).
    #[error("shape error: {0}")]
    Shape(String),

    /// The optional time budget ran out; carries the best lower bound found.
    #[error("budget exhausted: best lower bound so far is {lower_bound}")]
    Budget { lower_bound: usize },

    /// An internal invariant was violated; indicates a solver bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
