//! Closed-form test signals and per-period reference values.

use std::f64::consts::PI;

pub fn sine(freq: f64, rate: f64, len: usize) -> Vec<f64> {
    (0..len)
        .map(|i| (2.0 * PI * freq * i as f64 / rate).sin())
        .collect()
}

pub fn am_modulator(i: usize, rate: f64) -> f64 {
    0.6 + 0.4 * (2.0 * PI * 3.0 * i as f64 / rate).cos()
}

/// `(0.6 + 0.4 cos(2π·3t)) · sin(2π·1000t)` sampled at `rate`.
pub fn am_tone(rate: f64, len: usize) -> Vec<f64> {
    (0..len)
        .map(|i| am_modulator(i, rate) * (2.0 * PI * 1000.0 * i as f64 / rate).sin())
        .collect()
}

/// Index and value of the maximum sample inside every full period
/// `[k·P, (k+1)·P)` of a wave with period `P` samples. A trailing partial
/// period is included when it is non-empty.
pub fn per_period_maxima(samples: &[f64], period: f64) -> Vec<(usize, f64)> {
    let mut out = Vec::new();
    let mut k = 0usize;
    loop {
        let start = (k as f64 * period).ceil() as usize;
        if start >= samples.len() {
            break;
        }
        let end = (((k + 1) as f64 * period).ceil() as usize).min(samples.len());
        let mut best = start;
        for i in start..end {
            if samples[i] > samples[best] {
                best = i;
            }
        }
        out.push((best, samples[best]));
        k += 1;
    }
    out
}
