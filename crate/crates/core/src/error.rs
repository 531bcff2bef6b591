use thiserror::Error;

/// Errors raised across the toolkit.
///
/// `Domain` and `NotInscribed` describe bad inputs; `Convergence` means a
/// solver lost its bracket, which only happens through a bug or a tolerance
/// misconfiguration.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("convergence failure: {0}")]
    Convergence(String),
    #[error("square is not inscribed: {which} clearance {clearance:e} exceeds tolerance {tol:e}")]
    NotInscribed {
        which: &'static str,
        clearance: f64,
        tol: f64,
    },
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("leading coefficient of p vanishes at k0 = {0}")]
    DegreeDrop(String),
    #[error("cycle-type histogram is empty")]
    EmptyHistogram,
    #[error("malformed polynomial document: {0}")]
    Format(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn convergence(msg: impl Into<String>) -> Self {
        Error::Convergence(msg.into())
    }

    /// True for errors caused by the caller's input rather than by the solver.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Convergence(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
