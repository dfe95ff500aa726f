//! Geometric oracles over plain `(x, y)` tuples.

pub type Pt = (f64, f64);

fn dist(a: Pt, b: Pt) -> f64 {
    ((a.0 - b.0).powi(2) + (a.1 - b.1).powi(2)).sqrt()
}

/// Circumradius computed from the explicit circumcenter (perpendicular
/// bisector intersection). Returns `None` for collinear or coincident input.
pub fn circumradius_via_center(a: Pt, b: Pt, c: Pt) -> Option<f64> {
    let d = 2.0 * (a.0 * (b.1 - c.1) + b.0 * (c.1 - a.1) + c.0 * (a.1 - b.1));
    if d.abs() < 1e-300 {
        return None;
    }
    let a2 = a.0 * a.0 + a.1 * a.1;
    let b2 = b.0 * b.0 + b.1 * b.1;
    let c2 = c.0 * c.0 + c.1 * c.1;
    let ux = (a2 * (b.1 - c.1) + b2 * (c.1 - a.1) + c2 * (a.1 - b.1)) / d;
    let uy = (a2 * (c.0 - b.0) + b2 * (a.0 - c.0) + c2 * (b.0 - a.0)) / d;
    Some(dist((ux, uy), a))
}

/// Upper convex hull by Andrew's monotone chain. Input must be sorted by
/// strictly increasing x. Collinear interior points are dropped.
pub fn upper_hull(points: &[Pt]) -> Vec<usize> {
    let cross = |o: Pt, a: Pt, b: Pt| (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
    let mut hull: Vec<usize> = Vec::new();
    for (i, &p) in points.iter().enumerate() {
        while hull.len() >= 2
            && cross(points[hull[hull.len() - 2]], points[hull[hull.len() - 1]], p) >= 0.0
        {
            hull.pop();
        }
        hull.push(i);
    }
    hull
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleChain {
    pub ordinals: Vec<usize>,
    pub bridged: Vec<bool>,
    /// Set when some decision came within the general-position margin, in
    /// which case the result is not a reliable reference.
    pub degenerate: bool,
}

/// Margin inside which a point-to-circle distance or a pair of competing
/// center angles is treated as a degenerate (non general position) case.
pub const GENERAL_POSITION_MARGIN: f64 = 1e-6;

/// O(m³) empty-disc chain.
///
/// A chord `(p, q)` with `q` right of `p` is accepted when `|pq| ≤ 2α(1+tol)`
/// and the radius-α disc through both points whose center lies on the left of
/// `p → q` (the upper side) holds no other point strictly inside. From the
/// current point the chain follows the accepted chord whose disc center sits
/// furthest counter-clockwise around the current point; when nothing is
/// accepted the chain steps to the next point and marks the edge as bridged.
pub fn empty_disc_chain(points: &[Pt], alpha: f64, tol: f64) -> OracleChain {
    let m = points.len();
    let mut ordinals = vec![0];
    let mut bridged = Vec::new();
    let mut degenerate = false;
    let mut cur = 0;
    let reach = 2.0 * alpha * (1.0 + tol);
    while cur + 1 < m {
        let p = points[cur];
        let mut accepted: Vec<(f64, usize)> = Vec::new();
        for q_idx in cur + 1..m {
            let q = points[q_idx];
            let d = dist(p, q);
            if d > reach {
                continue;
            }
            let (ux, uy) = ((q.0 - p.0) / d, (q.1 - p.1) / d);
            let h = (alpha * alpha - d * d / 4.0).max(0.0).sqrt();
            let center = ((p.0 + q.0) / 2.0 - uy * h, (p.1 + q.1) / 2.0 + ux * h);
            let mut empty = true;
            for (k, &other) in points.iter().enumerate() {
                if k == cur || k == q_idx {
                    continue;
                }
                let dk = dist(center, other);
                if (dk - alpha).abs() < GENERAL_POSITION_MARGIN {
                    degenerate = true;
                }
                if dk < alpha {
                    empty = false;
                }
            }
            if empty {
                accepted.push(((center.1 - p.1).atan2(center.0 - p.0), q_idx));
            }
        }
        accepted.sort_by(|a, b| b.0.total_cmp(&a.0));
        if accepted.len() >= 2 && accepted[0].0 - accepted[1].0 < GENERAL_POSITION_MARGIN {
            degenerate = true;
        }
        match accepted.first() {
            Some(&(_, next)) => {
                ordinals.push(next);
                bridged.push(false);
                cur = next;
            }
            None => {
                cur += 1;
                ordinals.push(cur);
                bridged.push(true);
            }
        }
    }
    OracleChain {
        ordinals,
        bridged,
        degenerate,
    }
}
