use thiserror::Error;

use crate::outage::Scheme;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("invalid topology: {0}")]
    Topology(String),

    #[error("bracket expansion failed after {expansions} steps (last power {power:e} W)")]
    BracketExpansion { expansions: usize, power: f64 },

    #[error("non-finite value encountered at power {power:e} W")]
    NonFinite { power: f64 },

    #[error("bisection did not converge in {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("solved power violates the IDF polynomial form: residual {residual:e} > {limit:e}")]
    PolynomialMismatch { residual: f64, limit: f64 },

    #[error("{location}: {message}")]
    Config { location: String, message: String },

    #[error("{scheme} at {variable} = {point}: {source}")]
    SweepPoint {
        scheme: Scheme,
        variable: &'static str,
        point: f64,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn param(name: &'static str, value: f64, reason: &'static str) -> Self {
        Error::InvalidParameter {
            name,
            value,
            reason,
        }
    }

    pub(crate) fn config(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            location: location.into(),
            message: message.into(),
        }
    }

    /// True for failures of the numerical power solver.
    pub fn is_solver_failure(&self) -> bool {
        match self {
            Error::BracketExpansion { .. }
            | Error::NonFinite { .. }
            | Error::NoConvergence { .. }
            | Error::PolynomialMismatch { .. } => true,
            Error::SweepPoint { source, .. } => source.is_solver_failure(),
            _ => false,
        }
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_) => 1,
            e if e.is_solver_failure() => 3,
            _ => 2,
        }
    }
}
