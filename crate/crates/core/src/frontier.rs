//! Rolling-disc construction of the upper alpha frontier.
//!
//! A disc of radius alpha rests on the current point and is rotated
//! clockwise about it until its boundary meets another point to the right;
//! that point becomes the new pivot. The disc center direction, seen from the
//! pivot, is tracked as an angle so that every step resumes the rotation where
//! the previous one stopped.

use std::f64::consts::{PI, TAU};

use crate::error::{EnvelopeError, Result};
use crate::scale::ScaledPoints;

/// Center angle used at the start of a chain and after a bridged edge: the
/// disc sits directly left of the pivot, where no point to the right can lie
/// inside it.
pub const START_ANGLE: f64 = PI;

/// Result of one pivot step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Contact {
    /// Ordinal of the next frontier point.
    pub next: usize,
    /// Angle of `(disc center − next point)` after the step.
    pub center_angle: f64,
    /// True when no point was within reach and the step jumped to the next
    /// point in x order.
    pub bridged: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontierChain {
    pub ordinals: Vec<usize>,
    /// One flag per edge, `ordinals.len() − 1` entries.
    pub bridged: Vec<bool>,
}

fn wrap_angle(a: f64) -> f64 {
    let w = a.rem_euclid(TAU);
    if w > PI {
        w - TAU
    } else {
        w
    }
}

/// Clockwise rotation in `[0, 2π)` taking angle `from` to angle `to`.
/// Rotations within `tol` of a full turn count as zero so that a point lying
/// exactly on the current disc is not pushed to the back of the queue.
fn clockwise(from: f64, to: f64, tol: f64) -> f64 {
    let r = (from - to).rem_euclid(TAU);
    if r >= TAU - tol {
        0.0
    } else {
        r
    }
}

/// Rotates the disc resting on `scaled.points[from]` (center at
/// `center_angle`) clockwise until it touches a point further right.
///
/// Ties in rotation go to the nearer point, then to the smaller x.
pub fn next_contact(
    scaled: &ScaledPoints,
    from: usize,
    center_angle: f64,
    alpha: f64,
    tol: f64,
) -> Result<Contact> {
    let pts = &scaled.points;
    if from + 1 >= pts.len() {
        return Err(EnvelopeError::NoNextPoint(from));
    }
    let cur = pts[from];
    let reach = 2.0 * alpha * (1.0 + tol);

    // (rotation, distance, ordinal, center angle seen from the new pivot)
    let mut best: Option<(f64, f64, usize, f64)> = None;
    for (j, &q) in pts.iter().enumerate().skip(from + 1) {
        let dx = q.x - cur.x;
        if dx > reach {
            break;
        }
        let d = cur.distance(q);
        if d > reach {
            continue;
        }
        let dir = (q.y - cur.y).atan2(dx);
        let half = (d / (2.0 * alpha)).min(1.0).acos();
        let rot_upper = clockwise(center_angle, dir + half, tol);
        let rot_lower = clockwise(center_angle, dir - half, tol);
        // The center seen from q mirrors the center seen from cur across the
        // chord's perpendicular bisector.
        let (rot, new_angle) = if rot_upper <= rot_lower {
            (rot_upper, dir + PI - half)
        } else {
            (rot_lower, dir + PI + half)
        };
        let better = match best {
            None => true,
            Some((b_rot, b_d, _, _)) => rot < b_rot || (rot == b_rot && d < b_d),
        };
        if better {
            best = Some((rot, d, j, wrap_angle(new_angle)));
        }
    }

    Ok(match best {
        Some((_, _, next, center_angle)) => Contact {
            next,
            center_angle,
            bridged: false,
        },
        None => Contact {
            next: from + 1,
            center_angle: START_ANGLE,
            bridged: true,
        },
    })
}

/// Upper alpha frontier of `scaled`, from its first to its last point.
pub fn alpha_frontier(scaled: &ScaledPoints, alpha: f64, tol: f64) -> Result<FrontierChain> {
    if !(alpha.is_finite() && alpha > 0.0) {
        return Err(EnvelopeError::InvalidInput(format!(
            "alpha must be finite and positive, got {alpha}"
        )));
    }
    if scaled.is_empty() {
        return Err(EnvelopeError::InvalidInput("no points".into()));
    }
    let last = scaled.len() - 1;
    let mut chain = FrontierChain {
        ordinals: vec![0],
        bridged: Vec::new(),
    };
    let mut pos = 0;
    let mut angle = START_ANGLE;
    while pos < last {
        let contact = next_contact(scaled, pos, angle, alpha, tol)?;
        chain.ordinals.push(contact.next);
        chain.bridged.push(contact.bridged);
        pos = contact.next;
        angle = contact.center_angle;
    }
    Ok(chain)
}
