//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("topology mismatch: {0}")]
    Topology(String),

    #[error("engine rejected decision: {0}")]
    EngineRejection(String),

    #[error("unknown experiment `{0}`; valid ids: {1}")]
    UnknownExperiment(String, String),

    #[error("unknown condition `{condition}` for experiment `{experiment}`")]
    UnknownCondition {
        experiment: String,
        condition: String,
    },

    #[error("dataset schema violation at row {row}: {message}")]
    Schema { row: usize, message: String },

    #[error("mixed experiment ids in transcript set: {0} vs {1}")]
    MixedExperiments(String, String),

    #[error("unknown decision slot `{0}`")]
    UnknownSlot(String),

    #[error("missing output category `{0}` in dataset")]
    MissingCategory(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("empty sample for `{0}`")]
    EmptySample(String),

    #[error("singular design matrix: {0}")]
    SingularDesign(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("invalid sampling config: {0}")]
    InvalidSampling(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("config error at key `{key}`: {message}")]
    Config { key: String, message: String },

    #[error("prompt template missing for ({experiment}, {condition}, {role})")]
    MissingTemplate {
        experiment: String,
        condition: String,
        role: String,
    },

    #[error("transport error: {0}")]
    Transport(String),

    #[error("http {status}: {body}")]
    Http { status: u16, body: String },

    #[error("sampling parameter rejected by server: {0}")]
    ParameterRejected(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
