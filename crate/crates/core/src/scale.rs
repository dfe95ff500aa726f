use crate::candidates::Candidate;
use crate::error::{EnvelopeError, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn distance(self, other: Point) -> f64 {
        (other.x - self.x).hypot(other.y - self.y)
    }
}

/// Candidates mapped onto commensurate axes: amplitudes divided by the
/// global peak, sample indices divided by the mean candidate spacing.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaledPoints {
    pub points: Vec<Point>,
    /// Original index units per scaled x unit.
    pub x_step: f64,
    /// Amplitude that maps to `y = 1`.
    pub y_max: f64,
}

impl ScaledPoints {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `x_last − x_first`, 0 for fewer than two points.
    pub fn x_span(&self) -> f64 {
        match (self.points.first(), self.points.last()) {
            (Some(a), Some(b)) => b.x - a.x,
            _ => 0.0,
        }
    }
}

pub fn normalize_and_scale(candidates: &[Candidate], y_max: f64) -> Result<ScaledPoints> {
    if y_max.is_nan() || y_max <= 0.0 {
        return Err(EnvelopeError::SilentSignal);
    }
    let (first, last) = match (candidates.first(), candidates.last()) {
        (Some(f), Some(l)) => (f, l),
        _ => return Err(EnvelopeError::InvalidInput("no candidates".into())),
    };
    let m = candidates.len();
    let x_step = if m >= 2 {
        (last.index - first.index) as f64 / (m - 1) as f64
    } else {
        1.0
    };
    let points = candidates
        .iter()
        .map(|c| Point::new(c.index as f64 / x_step, c.value / y_max))
        .collect();
    Ok(ScaledPoints {
        points,
        x_step,
        y_max,
    })
}
