//! Signal ingestion and output: a small RIFF/WAVE subset (16-bit PCM and
//! 32-bit float) and one-value-per-line CSV.

mod csv;
mod error;
mod wav;

pub use crate::csv::{read_csv, write_csv};
pub use error::{IoError, Result};
pub use wav::{read_wav, write_wav, write_wav_channels, WavFormat, WavInfo};
