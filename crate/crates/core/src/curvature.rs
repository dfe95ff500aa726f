use crate::scale::{Point, ScaledPoints};

/// Circumradius of the triangle `p1 p2 p3`, the reciprocal of its Menger
/// curvature. Collinear or coincident points give `f64::INFINITY`.
pub fn menger_circumradius(p1: Point, p2: Point, p3: Point, tol: f64) -> f64 {
    let a = p1.distance(p2);
    let b = p2.distance(p3);
    let c = p1.distance(p3);
    let cross = ((p2.x - p1.x) * (p3.y - p1.y) - (p2.y - p1.y) * (p3.x - p1.x)).abs();
    let sides = a * b * c;
    if cross <= tol * sides || sides == 0.0 {
        return f64::INFINITY;
    }
    sides / (2.0 * cross)
}

/// Disc radius from the median circumradius of consecutive point triples,
/// clamped to `[1, x_span]`. Falls back to `max(1, x_span)` when there are
/// fewer than three points or every triple is collinear.
pub fn estimate_alpha(scaled: &ScaledPoints, tol: f64) -> f64 {
    let x_span = scaled.x_span();
    let fallback = x_span.max(1.0);
    let mut radii: Vec<f64> = scaled
        .points
        .windows(3)
        .map(|w| menger_circumradius(w[0], w[1], w[2], tol))
        .filter(|r| r.is_finite())
        .collect();
    if radii.is_empty() {
        return fallback;
    }
    radii.sort_by(f64::total_cmp);
    let mid = radii.len() / 2;
    let median = if radii.len() % 2 == 1 {
        radii[mid]
    } else {
        0.5 * (radii[mid - 1] + radii[mid])
    };
    median.min(x_span).max(1.0)
}
