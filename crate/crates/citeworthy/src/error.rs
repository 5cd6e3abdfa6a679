//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the corpus pipeline and the baseline models.
#[derive(Debug, Error)]
pub enum Error {
    /// A corpus record could not be parsed into a case document.
    #[error("malformed record: {0}")]
    MalformedRecord(String),

    /// The record parsed but carried no opinion text.
    #[error("record has no opinion section")]
    MissingOpinion,

    /// The corpus source path does not exist or cannot be read.
    #[error("source unreadable: {path}: {reason}")]
    SourceUnreadable { path: String, reason: String },

    /// Cleaning removed every character of the opinion.
    #[error("opinion empty after cleaning")]
    EmptyAfterCleaning,

    /// A citation span does not fit inside its sentence.
    #[error("span {start}..{end} out of bounds for sentence of length {len}")]
    SpanOutOfBounds { start: usize, end: usize, len: usize },

    /// A sampling target exceeds the number of available records.
    #[error("sample target {target} exceeds corpus size {available}")]
    TargetTooLarge { target: usize, available: usize },

    /// TF-IDF fitting requires at least one document.
    #[error("cannot fit vectorizer on an empty corpus")]
    EmptyCorpus,

    /// Training data holds a single effective class.
    #[error("degenerate labels: both classes must carry positive weight")]
    DegenerateLabels,

    /// The positive-unlabeled estimator produced unusable probabilities.
    #[error("degenerate estimator: {0}")]
    DegenerateEstimator(String),

    /// A vector length does not match the model dimension.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Prediction and gold label sequences differ in length.
    #[error("length mismatch: {left} predictions vs {right} gold labels")]
    LengthMismatch { left: usize, right: usize },

    /// A persisted model file could not be read back.
    #[error("model file error: {0}")]
    ModelFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
