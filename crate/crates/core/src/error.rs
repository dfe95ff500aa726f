use thiserror::Error;

pub type Result<T, E = EnvelopeError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EnvelopeError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("silent signal")]
    SilentSignal,
    #[error("signal has no positive pulses")]
    NoPositivePulses,
    #[error("signal has no negative pulses")]
    NoNegativePulses,
    #[error("no point after position {0}")]
    NoNextPoint(usize),
}
