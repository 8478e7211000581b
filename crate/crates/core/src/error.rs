//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of an operation.
    #[error("domain error in {op}: {msg}")]
    Domain { op: &'static str, msg: String },

    /// A series or iteration hit its term cap before reaching tolerance.
    #[error("series did not converge within {max_terms} terms (last increment {last_increment:e})")]
    NonConvergence { max_terms: usize, last_increment: f64 },

    /// Two points coincide where a direction or distance is required.
    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),

    /// Adaptive quadrature exhausted its subdivision budget.
    #[error("quadrature failed: tolerance {tol:e} not reached (estimate {estimate:e}, error bound {error_bound:e})")]
    QuadratureFailure {
        tol: f64,
        estimate: f64,
        error_bound: f64,
    },

    /// Configuration value violates an invariant (named in the message).
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// Configuration file could not be parsed.
    #[error("config parse error in {path}: {msg}")]
    ConfigParse { path: String, msg: String },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn domain(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Domain {
            op,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
