use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Invalid parameters or configuration (maps to CLI exit code 2).
    #[error("invalid configuration: {0}")]
    Config(String),

    /// A quadrature failed to reach its tolerance (exit code 3).
    #[error("quadrature did not converge in {context}: achieved {achieved:.3e}, requested {requested:.3e}")]
    QuadratureFailure {
        context: &'static str,
        achieved: f64,
        requested: f64,
    },

    /// A root solver failed to converge (exit code 3).
    #[error("solver failed in {context}: {detail}")]
    SolverFailure { context: &'static str, detail: String },

    /// A converged root was rejected as unphysical.
    #[error("rejected root in {context}: {detail}")]
    RejectedRoot { context: &'static str, detail: String },

    /// Argument outside the documented accuracy window of a special function.
    #[error("argument outside accuracy window: {0}")]
    AccuracyWindow(String),

    /// Degenerate stationary point; the caller must use the cubic path.
    #[error("degenerate saddle: {0}")]
    DegenerateSaddle(String),

    /// Singular input to an analytic kernel (e.g. zero on-shell momentum).
    #[error("singular input: {0}")]
    SingularInput(String),

    /// Requested value cannot be produced from the available data.
    #[error("{0}")]
    Domain(String),

    /// I/O failure while reading configs or writing tables.
    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// CLI exit code mandated by the interface contract:
    /// 2 for invalid configuration, 3 for numerical non-convergence,
    /// 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Domain(_) => 2,
            Error::QuadratureFailure { .. }
            | Error::SolverFailure { .. }
            | Error::RejectedRoot { .. }
            | Error::DegenerateSaddle(_)
            | Error::AccuracyWindow(_)
            | Error::SingularInput(_) => 3,
            Error::Io { .. } => 1,
        }
    }
}
