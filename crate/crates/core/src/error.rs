use std::fmt;

/// Errors raised by bound evaluation, exact combinatorics and simulation.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A query or parameter outside its documented domain.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A function was evaluated outside its natural domain (a logarithm with
    /// nonzero multiplier received a nonpositive argument, and so on).
    #[error("invalid point: {0}")]
    InvalidPoint(String),

    /// The equation provably has no root for the given arguments.
    #[error("no root: {0}")]
    NoRoot(String),

    /// No sign change could be bracketed within the configured search range.
    #[error("bracket search failed for {what}: {diagnostics}")]
    BracketFailure { what: &'static str, diagnostics: BracketDiagnostics },

    /// Bisection ran out of iterations before the bracket became narrow enough.
    #[error("{what} did not converge in {iterations} iterations (bracket width {width:e})")]
    NotConverged { what: &'static str, iterations: usize, width: f64 },

    /// A parity constraint of the pairing model is violated.
    #[error("parity violation: {0}")]
    Parity(String),

    /// An exhaustive computation would exceed its configured cap.
    #[error("refusing {what}: requires {required}, cap is {cap}")]
    CapExceeded { what: &'static str, required: String, cap: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Last bracket examined by a failed bracket search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BracketDiagnostics {
    pub lo: f64,
    pub hi: f64,
    pub f_lo: f64,
    pub f_hi: f64,
}

impl fmt::Display for BracketDiagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "lo={:e} hi={:e} f(lo)={:e} f(hi)={:e}",
            self.lo, self.hi, self.f_lo, self.f_hi
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
