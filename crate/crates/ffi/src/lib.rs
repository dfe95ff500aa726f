//! C calling-convention surface.
//!
//! Every export returns a status code (see the `ENV_*` constants) and writes
//! results into caller-owned buffers. Indices and counts are `u64`. The
//! library keeps no global state; all exports may be called concurrently.
//!
//! A matching C header lives in `include/envelope.h`.

use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::slice;

use envelope_core::{
    envelope_indices, frontiers, EnvelopeError, EnvelopeParams, Frontier, Signal,
};

pub const ENV_OK: i32 = 0;
pub const ENV_NULL_ARGUMENT: i32 = 1;
/// Empty input, a non-finite sample or alpha, or a buffer that is too small.
pub const ENV_EMPTY_INPUT: i32 = 2;
pub const ENV_SILENT_SIGNAL: i32 = 3;
pub const ENV_NO_PULSES: i32 = 4;
pub const ENV_INTERNAL: i32 = 5;

const VERSION: &str = env!("CARGO_PKG_VERSION");
const MIN_VERSION_CAPACITY: u64 = 16;

fn status_of(err: &EnvelopeError) -> i32 {
    match err {
        EnvelopeError::InvalidInput(_) => ENV_EMPTY_INPUT,
        EnvelopeError::SilentSignal => ENV_SILENT_SIGNAL,
        EnvelopeError::NoPositivePulses | EnvelopeError::NoNegativePulses => ENV_NO_PULSES,
        EnvelopeError::NoNextPoint(_) => ENV_INTERNAL,
    }
}

fn params_for(alpha: f64) -> Option<EnvelopeParams> {
    if alpha.is_nan() || alpha.is_infinite() {
        None
    } else if alpha <= 0.0 {
        Some(EnvelopeParams::default())
    } else {
        Some(EnvelopeParams::manual(alpha))
    }
}

/// Copies `f` into `out` (capacity `cap`). Returns false when it does not fit.
unsafe fn emit(f: &Frontier, out: *mut u64, cap: usize, len: *mut u64) -> bool {
    if f.indices.len() > cap {
        return false;
    }
    let dst = slice::from_raw_parts_mut(out, f.indices.len());
    for (d, &i) in dst.iter_mut().zip(&f.indices) {
        *d = i as u64;
    }
    *len = f.indices.len() as u64;
    true
}

/// Reads the input signal, or returns the status to report.
unsafe fn load_signal(signal: *const f64, n: u64) -> Result<Signal, i32> {
    if signal.is_null() {
        return Err(ENV_NULL_ARGUMENT);
    }
    let n = usize::try_from(n).map_err(|_| ENV_EMPTY_INPUT)?;
    if n == 0 {
        return Err(ENV_EMPTY_INPUT);
    }
    let samples = slice::from_raw_parts(signal, n).to_vec();
    Signal::new(samples).map_err(|_| ENV_EMPTY_INPUT)
}

fn guarded(f: impl FnOnce() -> i32) -> i32 {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(ENV_INTERNAL)
}

/// Upper and lower frontier indices of `signal[0..n]`.
///
/// `alpha <= 0` selects the automatic disc radius. Both out buffers must
/// hold at least `n` entries. When the signal has pulses of only one sign the
/// call returns `ENV_NO_PULSES` with the available side filled and the other
/// length set to 0. Any other non-zero status leaves both lengths at 0.
///
/// # Safety
///
/// `signal` must point to `n` readable `f64`s; `upper_out` and `lower_out`
/// to `n` writable `u64`s; `upper_len` and `lower_len` to writable `u64`s.
#[no_mangle]
pub unsafe extern "C" fn env_frontiers(
    signal: *const f64,
    n: u64,
    alpha: f64,
    upper_out: *mut u64,
    upper_len: *mut u64,
    lower_out: *mut u64,
    lower_len: *mut u64,
) -> i32 {
    guarded(|| {
        if upper_len.is_null() || lower_len.is_null() {
            return ENV_NULL_ARGUMENT;
        }
        *upper_len = 0;
        *lower_len = 0;
        if upper_out.is_null() || lower_out.is_null() {
            return ENV_NULL_ARGUMENT;
        }
        let signal = match load_signal(signal, n) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let Some(params) = params_for(alpha) else {
            return ENV_EMPTY_INPUT;
        };
        let set = match frontiers(&signal, &params) {
            Ok(set) => set,
            Err(e) => return status_of(&e),
        };
        let cap = signal.len();
        if !emit(&set.upper, upper_out, cap, upper_len) || !emit(&set.lower, lower_out, cap, lower_len) {
            *upper_len = 0;
            *lower_len = 0;
            return ENV_INTERNAL;
        }
        if set.upper.is_empty() || set.lower.is_empty() {
            ENV_NO_PULSES
        } else {
            ENV_OK
        }
    })
}

/// Envelope indices of `|signal[0..n]|` into `out` (capacity `n`).
///
/// # Safety
///
/// `signal` must point to `n` readable `f64`s, `out` to `n` writable `u64`s
/// and `out_len` to a writable `u64`.
#[no_mangle]
pub unsafe extern "C" fn env_envelope(
    signal: *const f64,
    n: u64,
    alpha: f64,
    out: *mut u64,
    out_len: *mut u64,
) -> i32 {
    guarded(|| {
        if out_len.is_null() {
            return ENV_NULL_ARGUMENT;
        }
        *out_len = 0;
        if out.is_null() {
            return ENV_NULL_ARGUMENT;
        }
        let signal = match load_signal(signal, n) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let Some(params) = params_for(alpha) else {
            return ENV_EMPTY_INPUT;
        };
        match envelope_indices(&signal, &params) {
            Ok(f) if emit(&f, out, signal.len(), out_len) => ENV_OK,
            Ok(_) => ENV_INTERNAL,
            Err(e) => status_of(&e),
        }
    })
}

/// Writes the library version as a NUL-terminated string. `capacity` must be
/// at least 16 bytes.
///
/// # Safety
///
/// `out` must point to `capacity` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn env_version(out: *mut c_char, capacity: u64) -> i32 {
    guarded(|| {
        if out.is_null() {
            return ENV_NULL_ARGUMENT;
        }
        let needed = VERSION.len() as u64 + 1;
        if capacity < MIN_VERSION_CAPACITY.max(needed) {
            return ENV_EMPTY_INPUT;
        }
        let dst = slice::from_raw_parts_mut(out as *mut u8, VERSION.len() + 1);
        dst[..VERSION.len()].copy_from_slice(VERSION.as_bytes());
        dst[VERSION.len()] = 0;
        ENV_OK
    })
}
