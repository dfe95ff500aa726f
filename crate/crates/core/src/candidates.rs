use crate::error::{EnvelopeError, Result};
use crate::signal::{Pulse, Sign, Signal};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Candidate {
    pub index: usize,
    pub value: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateMode {
    /// Peaks of positive pulses and troughs of negative pulses, kept apart.
    Split,
    /// One `|s|` extremum per pulse of either sign, all in `positive`.
    MergedAbs,
}

/// Per-side candidate lists, each ordered by strictly increasing index.
#[derive(Debug, Clone, PartialEq)]
pub struct CandidateSet {
    pub positive: Vec<Candidate>,
    pub negative: Vec<Candidate>,
    pub mode: CandidateMode,
}

/// First index in `pulse` whose key is strictly greatest.
fn argmax_by(samples: &[f64], pulse: &Pulse, key: impl Fn(f64) -> f64) -> usize {
    let mut best = pulse.start;
    for i in pulse.start + 1..=pulse.end {
        if key(samples[i]) > key(samples[best]) {
            best = i;
        }
    }
    best
}

pub fn extract_candidates(
    signal: &Signal,
    pulses: &[Pulse],
    mode: CandidateMode,
) -> Result<CandidateSet> {
    if pulses.is_empty() {
        return Err(EnvelopeError::SilentSignal);
    }
    let s = signal.samples();
    let mut set = CandidateSet {
        positive: Vec::new(),
        negative: Vec::new(),
        mode,
    };
    for pulse in pulses {
        match (mode, pulse.sign) {
            (CandidateMode::Split, Sign::Positive) => {
                let index = argmax_by(s, pulse, |v| v);
                set.positive.push(Candidate { index, value: s[index] });
            }
            (CandidateMode::Split, Sign::Negative) => {
                let index = argmax_by(s, pulse, |v| -v);
                set.negative.push(Candidate { index, value: s[index] });
            }
            (CandidateMode::MergedAbs, _) => {
                let index = argmax_by(s, pulse, f64::abs);
                set.positive.push(Candidate {
                    index,
                    value: s[index].abs(),
                });
            }
        }
    }
    Ok(set)
}
