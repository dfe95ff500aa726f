use thiserror::Error;

pub type Result<T, E = IoError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IoError {
    /// Malformed or unsupported WAV content; `field` names the offending part.
    #[error("wav format error in {field}: {detail}")]
    Format { field: &'static str, detail: String },
    #[error("parse error on line {line}: {detail}")]
    Parse { line: usize, detail: String },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl IoError {
    pub(crate) fn format(field: &'static str, detail: impl Into<String>) -> Self {
        IoError::Format {
            field,
            detail: detail.into(),
        }
    }
}
