use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument is outside the mathematical domain of an operation
    /// (non-positive mass, coordinate outside the sampled profile, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A configuration value is outside its legal bounds.
    #[error("config error: {0}")]
    Config(String),

    /// The ODE integrator left the valid region (u must stay positive).
    #[error("integration error: {0}")]
    Integration(String),

    /// A surface is degenerate: the induced metric stopped being positive
    /// definite, usually a self-intersecting graph.
    #[error("geometry error: {0}")]
    Geometry(String),

    /// An API contract between modules was violated (mismatched grids,
    /// non-uniform variation steps, missing lapse data, ...).
    #[error("contract error: {0}")]
    Contract(String),

    /// The eigensolver failed to converge; carries the final residual.
    #[error("solver error: {message} (residual {residual:.3e} after {iterations} iterations)")]
    Solver {
        message: String,
        residual: f64,
        iterations: usize,
    },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serialize(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
    pub fn geometry(msg: impl Into<String>) -> Self {
        Error::Geometry(msg.into())
    }
}
