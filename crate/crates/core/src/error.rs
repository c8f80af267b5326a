use thiserror::Error;

/// Errors raised by the special functions, the quadrature driver and the verifier.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument violated a documented precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series or product did not reach its tail bound within the term cap.
    #[error(
        "{what} did not converge within {max_terms} terms (tail bound {bound:e}, target {eps:e})"
    )]
    NonConvergence {
        what: &'static str,
        max_terms: usize,
        bound: f64,
        eps: f64,
    },

    /// The integrand produced a non-finite value at an interior abscissa.
    #[error("integrand returned {value} at x = {x:e}")]
    NonFiniteIntegrand { x: f64, value: f64 },

    /// A theorem was requested with a q outside its regime.
    #[error("{theorem} requires {requirement}, got q = {q}")]
    Regime {
        theorem: &'static str,
        requirement: &'static str,
        q: f64,
    },

    /// A command-line argument or grid spec could not be parsed.
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
