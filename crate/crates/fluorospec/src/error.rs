//! Error type shared by the numerical kernels and spectrum evaluators.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A value lies outside the mathematical domain of the operation
    /// (negative time, non-finite parameter, pump rate out of range, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A structurally invalid argument (odd node count, empty grid, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A grid-point evaluation failed; carries the grid coordinates.
    #[error("scan point (t = {t}, detuning = {detuning}): {source}")]
    ScanPoint {
        t: f64,
        detuning: f64,
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
