//! Command-line front end: reads `.wav` or `.csv` signals, extracts
//! frontiers or the envelope, and writes `index,value` CSV files.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, ValueEnum};
use envelope_core::{
    envelope_indices, interpolate_frontier, lower_frontier, upper_frontier, EnvelopeError,
    EnvelopeParams, Frontier, Signal,
};
use envelope_io::{read_csv, read_wav, write_csv};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Upper and lower frontiers, written to `.upper.csv` and `.lower.csv`.
    Frontiers,
    /// Envelope of |s|, written to `.env.csv`.
    Envelope,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// One `index,value` row per frontier member.
    Indices,
    /// One row per sample, linearly interpolated between members.
    Interpolated,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AlphaArg {
    Auto,
    Manual(f64),
}

impl FromStr for AlphaArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("auto") {
            return Ok(AlphaArg::Auto);
        }
        let v: f64 = s
            .parse()
            .map_err(|_| format!("expected `auto` or a number, got {s:?}"))?;
        if v.is_finite() && v > 0.0 {
            Ok(AlphaArg::Manual(v))
        } else {
            Err(format!("alpha must be a finite number > 0, got {s}"))
        }
    }
}

impl fmt::Display for AlphaArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphaArg::Auto => f.write_str("auto"),
            AlphaArg::Manual(v) => write!(f, "{v}"),
        }
    }
}

/// Extract temporal envelopes or upper/lower frontiers from signals.
#[derive(Debug, Clone, PartialEq, Parser)]
#[command(name = "envelope", version)]
pub struct CliConfig {
    /// Input signals (`.wav` or `.csv`, one value per line).
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,

    #[arg(long, value_enum, default_value_t = Mode::Frontiers)]
    pub mode: Mode,

    /// Disc radius in scaled units, or `auto`.
    #[arg(long, default_value_t = AlphaArg::Auto)]
    pub alpha: AlphaArg,

    #[arg(long = "output-format", value_enum, default_value_t = OutputFormat::Indices)]
    pub output_format: OutputFormat,

    /// Channel to analyse in multi-channel WAV files.
    #[arg(long, default_value_t = 0)]
    pub channel: usize,

    /// Output file, or directory. With several inputs and a file path, each
    /// output is named `<out stem>.<input stem><suffix>`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl CliConfig {
    pub fn params(&self) -> EnvelopeParams {
        match self.alpha {
            AlphaArg::Auto => EnvelopeParams::default(),
            AlphaArg::Manual(a) => EnvelopeParams::manual(a),
        }
    }

    fn suffixes(&self) -> &'static [&'static str] {
        match self.mode {
            Mode::Frontiers => &[".upper.csv", ".lower.csv"],
            Mode::Envelope => &[".env.csv"],
        }
    }

    /// Output path for `input` with the given suffix.
    pub fn output_path(&self, input: &Path, suffix: &str) -> PathBuf {
        let input_stem = stem(input);
        let Some(out) = &self.out else {
            return input.with_file_name(format!("{input_stem}{suffix}"));
        };
        if out.is_dir() {
            return out.join(format!("{input_stem}{suffix}"));
        }
        let out_stem = stem(out);
        if self.inputs.len() > 1 {
            out.with_file_name(format!("{out_stem}.{input_stem}{suffix}"))
        } else if self.suffixes().len() == 1 {
            out.clone()
        } else {
            out.with_file_name(format!("{out_stem}{suffix}"))
        }
    }
}

fn stem(p: &Path) -> String {
    p.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

pub fn parse_args<I, T>(argv: I) -> Result<CliConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    CliConfig::try_parse_from(argv)
}

#[derive(Debug)]
enum InputKind {
    Wav,
    Csv,
}

fn input_kind(path: &Path) -> Result<InputKind, String> {
    let ext = path
        .extension()
        .map(|e| e.to_string_lossy().to_ascii_lowercase());
    match ext.as_deref() {
        Some("wav") => Ok(InputKind::Wav),
        Some("csv") => Ok(InputKind::Csv),
        _ => Err("unsupported input extension (expected .wav or .csv)".into()),
    }
}

/// Loads the selected channel of `path`.
pub fn load_signal(path: &Path, channel: usize) -> Result<Signal, String> {
    let kind = input_kind(path)?;
    let bytes = std::fs::read(path).map_err(|e| format!("cannot read file: {e}"))?;
    match kind {
        InputKind::Wav => {
            let (mut channels, info) = read_wav(&bytes).map_err(|e| e.to_string())?;
            if channel >= channels.len() {
                return Err(format!(
                    "channel {channel} out of range ({} channels)",
                    info.channels
                ));
            }
            Ok(channels.swap_remove(channel))
        }
        InputKind::Csv => {
            if channel != 0 {
                return Err(format!("channel {channel} out of range (csv has 1 channel)"));
            }
            let text = String::from_utf8(bytes).map_err(|_| "csv is not valid UTF-8".to_string())?;
            read_csv(&text).map_err(|e| e.to_string())
        }
    }
}

fn rows(config: &CliConfig, signal: &Signal, frontier: &Frontier, abs: bool) -> Result<Vec<(usize, f64)>, String> {
    let value = |i: usize| {
        let v = signal.samples()[i];
        if abs {
            v.abs()
        } else {
            v
        }
    };
    let members: Vec<(usize, f64)> = frontier.indices.iter().map(|&i| (i, value(i))).collect();
    match config.output_format {
        OutputFormat::Indices => Ok(members),
        OutputFormat::Interpolated => interpolate_frontier(signal.len(), &members)
            .map(|dense| dense.into_iter().enumerate().collect())
            .map_err(|e| e.to_string()),
    }
}

fn write_rows(path: &Path, rows: &[(usize, f64)]) -> Result<(), String> {
    std::fs::write(path, write_csv(rows))
        .map_err(|e| format!("cannot write {}: {e}", path.display()))
}

/// Processes one input. Returns notes for non-fatal conditions.
fn process(config: &CliConfig, input: &Path) -> Result<Vec<String>, String> {
    let signal = load_signal(input, config.channel)?;
    let params = config.params();
    let mut notes = Vec::new();
    match config.mode {
        Mode::Envelope => {
            let f = envelope_indices(&signal, &params).map_err(|e| e.to_string())?;
            write_rows(&config.output_path(input, ".env.csv"), &rows(config, &signal, &f, true)?)?;
        }
        Mode::Frontiers => {
            let upper = upper_frontier(&signal, &params);
            let lower = lower_frontier(&signal, &params);
            if let Err(e @ EnvelopeError::SilentSignal) = &upper {
                return Err(e.to_string());
            }
            for (result, suffix) in [(upper, ".upper.csv"), (lower, ".lower.csv")] {
                match result {
                    Ok(f) => write_rows(&config.output_path(input, suffix), &rows(config, &signal, &f, false)?)?,
                    Err(e @ (EnvelopeError::NoPositivePulses | EnvelopeError::NoNegativePulses)) => {
                        notes.push(format!("{e}; {suffix} not written"));
                    }
                    Err(e) => return Err(e.to_string()),
                }
            }
        }
    }
    Ok(notes)
}

/// Runs every input in order, writing one diagnostic line per failure or
/// note to `diag`. Returns the process exit code.
pub fn run(config: &CliConfig, diag: &mut dyn Write) -> i32 {
    let mut code = EXIT_OK;
    for input in &config.inputs {
        match process(config, input) {
            Ok(notes) => {
                for note in notes {
                    let _ = writeln!(diag, "{}: {note}", input.display());
                }
            }
            Err(e) => {
                let _ = writeln!(diag, "{}: {e}", input.display());
                code = EXIT_INPUT_FAILURE;
            }
        }
    }
    code
}
