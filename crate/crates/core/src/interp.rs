use crate::error::{EnvelopeError, Result};

/// Dense length-`n` curve through the frontier points: linear between
/// members, flat beyond the first and last member.
pub fn interpolate_frontier(n: usize, frontier: &[(usize, f64)]) -> Result<Vec<f64>> {
    let (&(first_i, first_v), &(last_i, last_v)) = match (frontier.first(), frontier.last()) {
        (Some(f), Some(l)) => (f, l),
        _ => return Err(EnvelopeError::InvalidInput("empty frontier".into())),
    };
    if last_i >= n {
        return Err(EnvelopeError::InvalidInput(format!(
            "frontier index {last_i} out of range for length {n}"
        )));
    }
    if frontier.windows(2).any(|w| w[0].0 >= w[1].0) {
        return Err(EnvelopeError::InvalidInput(
            "frontier indices must be strictly increasing".into(),
        ));
    }

    let mut out = Vec::with_capacity(n);
    out.resize(first_i, first_v);
    for w in frontier.windows(2) {
        let ((i0, v0), (i1, v1)) = (w[0], w[1]);
        let span = (i1 - i0) as f64;
        out.extend((i0..i1).map(|i| v0 + (v1 - v0) * ((i - i0) as f64 / span)));
    }
    out.resize(n, last_v);
    Ok(out)
}
