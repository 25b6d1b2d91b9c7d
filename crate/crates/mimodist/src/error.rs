//! Crate-wide error type and exit-code mapping.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied value violates an operation's preconditions.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A channel matrix cannot support the requested operation
    /// (e.g. an all-zero subcarrier row handed to the precoder).
    #[error("degenerate channel: {0}")]
    DegenerateChannel(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// Quadrature failed to converge or a computation produced non-finite values.
    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    /// Distribution fitting could not produce usable parameters.
    #[error("fit failure: {0}")]
    FitFailure(String),

    #[error("training failure at epoch {epoch}: {message}")]
    Training { epoch: usize, message: String },

    /// Pruning would remove every filter of a convolutional layer.
    #[error("structural pruning error: {0}")]
    Pruning(String),

    #[error("allocation failure for candidate {candidate_ibo_db} dB: {message}")]
    Allocation {
        candidate_ibo_db: f64,
        message: String,
    },

    #[error("config error: {0}")]
    Config(String),

    #[error("format error: {0}")]
    Format(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI: 2 config, 3 numeric, 4 I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::InvalidParameter(_) => 2,
            Error::Io(_) | Error::Format(_) => 4,
            _ => 3,
        }
    }
}
