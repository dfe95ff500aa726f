use crate::error::{EnvelopeError, Result};

/// A sampled real-valued signal. Samples are always finite.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    samples: Vec<f64>,
    sample_rate: Option<u32>,
}

impl Signal {
    pub fn new(samples: Vec<f64>) -> Result<Self> {
        if let Some(i) = samples.iter().position(|s| !s.is_finite()) {
            return Err(EnvelopeError::InvalidInput(format!(
                "sample {i} is not finite"
            )));
        }
        Ok(Self {
            samples,
            sample_rate: None,
        })
    }

    /// Attaches a sample rate. It is carried for I/O and never used by the
    /// geometry.
    pub fn with_sample_rate(mut self, rate: u32) -> Result<Self> {
        if rate == 0 {
            return Err(EnvelopeError::InvalidInput("sample rate must be positive".into()));
        }
        self.sample_rate = Some(rate);
        Ok(self)
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn sample_rate(&self) -> Option<u32> {
        self.sample_rate
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Largest absolute sample value, 0 for an empty signal.
    pub fn peak_abs(&self) -> f64 {
        self.samples.iter().fold(0.0, |m, s| m.max(s.abs()))
    }

    pub fn negated(&self) -> Self {
        Self {
            samples: self.samples.iter().map(|s| -s).collect(),
            sample_rate: self.sample_rate,
        }
    }

    pub(crate) fn require_non_empty(&self) -> Result<()> {
        if self.is_empty() {
            Err(EnvelopeError::InvalidInput("empty signal".into()))
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
}

/// A maximal run of strictly positive or strictly negative samples,
/// `start..=end`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pulse {
    pub start: usize,
    pub end: usize,
    pub sign: Sign,
}

fn sign_of(v: f64) -> Option<Sign> {
    if v > 0.0 {
        Some(Sign::Positive)
    } else if v < 0.0 {
        Some(Sign::Negative)
    } else {
        None
    }
}

/// Splits the signal into maximal same-sign runs. Zero samples belong to no
/// pulse.
pub fn find_pulses(signal: &Signal) -> Result<Vec<Pulse>> {
    signal.require_non_empty()?;
    let mut pulses = Vec::new();
    let mut open: Option<Pulse> = None;
    for (i, &v) in signal.samples().iter().enumerate() {
        let sign = sign_of(v);
        match (&mut open, sign) {
            (Some(p), Some(s)) if p.sign == s => p.end = i,
            (_, s) => {
                if let Some(p) = open.take() {
                    pulses.push(p);
                }
                open = s.map(|sign| Pulse {
                    start: i,
                    end: i,
                    sign,
                });
            }
        }
    }
    pulses.extend(open);
    Ok(pulses)
}
