//! Crate-wide error type and the exit-code mapping used by the CLI.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("timestep {t} out of range for schedule of length {len}")]
    TimestepOutOfRange { t: usize, len: usize },

    #[error("step ordering violated: t_prev ({t_prev}) > t ({t})")]
    StepOrdering { t: usize, t_prev: usize },

    #[error("sampler window [{lo}, {hi}) out of range for {steps} steps")]
    WindowOutOfRange { lo: usize, hi: usize, steps: usize },

    #[error("config error: {}", .0.join("; "))]
    Config(Vec<String>),

    #[error("data error: {0}")]
    Data(String),

    #[error("image decode error: {0}")]
    Decode(String),

    #[error("degenerate image size {width}x{height} (minimum side {min_side})")]
    DegenerateSize {
        width: u32,
        height: u32,
        min_side: u32,
    },

    #[error("client transport error: {0}")]
    ClientTransport(String),

    #[error("malformed client response: {0}")]
    MalformedResponse(String),

    #[error("summary still exceeds {budget} tokens after {retries} retries")]
    BudgetViolation { budget: usize, retries: usize },

    #[error("could not collect {wanted} valid negatives (got {got}) after retries")]
    InsufficientNegatives { wanted: usize, got: usize },

    #[error("quota {quota} exceeds available {available} for source '{source}'")]
    QuotaExceedsAvailable {
        source: String,
        quota: usize,
        available: usize,
    },

    #[error("sample '{0}' has no negatives but contrastive training is enabled")]
    MissingNegatives(String),

    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(String),
}

impl Error {
    /// Process exit code contract: 0 success, 2 config, 3 data, 4 external
    /// client, 5 internal invariant violation.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::InvalidRange(_) => 2,
            Error::Data(_)
            | Error::Decode(_)
            | Error::DegenerateSize { .. }
            | Error::QuotaExceedsAvailable { .. }
            | Error::MissingNegatives(_)
            | Error::EmptyInput(_)
            | Error::Checkpoint(_)
            | Error::Io(_)
            | Error::Serde(_) => 3,
            Error::ClientTransport(_)
            | Error::MalformedResponse(_)
            | Error::BudgetViolation { .. }
            | Error::InsufficientNegatives { .. } => 4,
            Error::ShapeMismatch(_)
            | Error::TimestepOutOfRange { .. }
            | Error::StepOrdering { .. }
            | Error::WindowOutOfRange { .. }
            | Error::Invariant(_) => 5,
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Serde(e.to_string())
    }
}
