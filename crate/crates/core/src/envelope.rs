use crate::candidates::{extract_candidates, Candidate, CandidateMode};
use crate::curvature::estimate_alpha;
use crate::error::{EnvelopeError, Result};
use crate::frontier::alpha_frontier;
use crate::scale::normalize_and_scale;
use crate::signal::{find_pulses, Signal};

pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum Alpha {
    /// Estimated from the curvature of the candidates.
    #[default]
    Auto,
    /// Fixed disc radius in scaled units.
    Manual(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnvelopeParams {
    pub alpha: Alpha,
    /// Relative tolerance for reach and collinearity tests.
    pub tol: f64,
}

impl Default for EnvelopeParams {
    fn default() -> Self {
        Self {
            alpha: Alpha::Auto,
            tol: DEFAULT_TOL,
        }
    }
}

impl EnvelopeParams {
    pub fn manual(alpha: f64) -> Self {
        Self {
            alpha: Alpha::Manual(alpha),
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if let Alpha::Manual(a) = self.alpha {
            if !(a.is_finite() && a > 0.0) {
                return Err(EnvelopeError::InvalidInput(format!(
                    "manual alpha must be finite and positive, got {a}"
                )));
            }
        }
        if !(self.tol > 0.0 && self.tol < 1e-3) {
            return Err(EnvelopeError::InvalidInput(format!(
                "tolerance must lie in (0, 1e-3), got {}",
                self.tol
            )));
        }
        Ok(())
    }
}

/// Frontier members as strictly increasing sample indices, plus one flag per
/// edge marking edges that bridge a gap the disc could not span.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Frontier {
    pub indices: Vec<usize>,
    pub bridged: Vec<bool>,
}

impl Frontier {
    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Pairs every member index with `samples[index]`.
    pub fn values_from(&self, samples: &[f64]) -> Vec<(usize, f64)> {
        self.indices.iter().map(|&i| (i, samples[i])).collect()
    }
}

/// Both frontiers of one signal. A side with no pulses is left empty.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FrontierSet {
    pub upper: Frontier,
    pub lower: Frontier,
}

fn frontier_of(candidates: &[Candidate], y_max: f64, params: &EnvelopeParams) -> Result<Frontier> {
    let scaled = normalize_and_scale(candidates, y_max)?;
    let alpha = match params.alpha {
        Alpha::Auto => estimate_alpha(&scaled, params.tol),
        Alpha::Manual(a) => a,
    };
    let chain = alpha_frontier(&scaled, alpha, params.tol)?;
    Ok(Frontier {
        indices: chain.ordinals.iter().map(|&o| candidates[o].index).collect(),
        bridged: chain.bridged,
    })
}

fn checked_pulses(signal: &Signal, params: &EnvelopeParams) -> Result<Vec<crate::Pulse>> {
    params.validate()?;
    let pulses = find_pulses(signal)?;
    if pulses.is_empty() {
        return Err(EnvelopeError::SilentSignal);
    }
    Ok(pulses)
}

/// Indices of the positive frontier: the peaks touched by a disc rolled
/// over the per-pulse maxima.
pub fn upper_frontier(signal: &Signal, params: &EnvelopeParams) -> Result<Frontier> {
    let pulses = checked_pulses(signal, params)?;
    let set = extract_candidates(signal, &pulses, CandidateMode::Split)?;
    if set.positive.is_empty() {
        return Err(EnvelopeError::NoPositivePulses);
    }
    frontier_of(&set.positive, signal.peak_abs(), params)
}

/// Indices of the negative frontier, computed as the upper frontier of the
/// negated signal.
pub fn lower_frontier(signal: &Signal, params: &EnvelopeParams) -> Result<Frontier> {
    upper_frontier(&signal.negated(), params).map_err(|e| match e {
        EnvelopeError::NoPositivePulses => EnvelopeError::NoNegativePulses,
        other => other,
    })
}

/// Indices of the envelope of `|s|`, using one extremum per pulse of either
/// sign.
pub fn envelope_indices(signal: &Signal, params: &EnvelopeParams) -> Result<Frontier> {
    let pulses = checked_pulses(signal, params)?;
    let set = extract_candidates(signal, &pulses, CandidateMode::MergedAbs)?;
    frontier_of(&set.positive, signal.peak_abs(), params)
}

/// Upper and lower frontiers together. Fails only when neither side exists.
pub fn frontiers(signal: &Signal, params: &EnvelopeParams) -> Result<FrontierSet> {
    let upper = match upper_frontier(signal, params) {
        Ok(f) => f,
        Err(EnvelopeError::NoPositivePulses) => Frontier::default(),
        Err(e) => return Err(e),
    };
    let lower = match lower_frontier(signal, params) {
        Ok(f) => f,
        Err(EnvelopeError::NoNegativePulses) => Frontier::default(),
        Err(e) => return Err(e),
    };
    Ok(FrontierSet { upper, lower })
}
