use std::fmt::Write;

use envelope_core::Signal;

use crate::error::{IoError, Result};

/// Parses one real number per non-empty line. LF and CRLF endings are both
/// accepted.
pub fn read_csv(text: &str) -> Result<Signal> {
    let mut samples = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let v: f64 = line.parse().map_err(|e| IoError::Parse {
            line: n + 1,
            detail: format!("{line:?}: {e}"),
        })?;
        if !v.is_finite() {
            return Err(IoError::Parse {
                line: n + 1,
                detail: format!("{line:?} is not finite"),
            });
        }
        samples.push(v);
    }
    if samples.is_empty() {
        return Err(IoError::InvalidInput("empty".into()));
    }
    Signal::new(samples).map_err(|e| IoError::InvalidInput(e.to_string()))
}

/// Renders `index,value` rows under a header. Values use the shortest
/// decimal form that parses back to the same `f64`.
pub fn write_csv(rows: &[(usize, f64)]) -> String {
    let mut out = String::from("index,value\n");
    for (i, v) in rows {
        writeln!(out, "{i},{v}").unwrap();
    }
    out
}
