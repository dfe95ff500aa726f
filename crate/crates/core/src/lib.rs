//! Geometric temporal-envelope extraction.
//!
//! A signal is split into pulses (maximal runs of same-sign samples), each
//! pulse contributes its extremum as a candidate, and a disc of radius alpha
//! is rolled over the candidates to pick out the frontier. The disc radius is
//! estimated from the discrete (Menger) curvature of consecutive candidates
//! unless the caller fixes it.
//!
//! ```
//! use envelope_core::{lower_frontier, upper_frontier, EnvelopeParams, Signal};
//!
//! let signal = Signal::new(vec![1.0, -1.0, 1.0, -1.0, 1.0]).unwrap();
//! let params = EnvelopeParams::default();
//! assert_eq!(upper_frontier(&signal, &params).unwrap().indices, vec![0, 2, 4]);
//! assert_eq!(lower_frontier(&signal, &params).unwrap().indices, vec![1, 3]);
//! ```

mod candidates;
mod curvature;
mod envelope;
mod error;
mod frontier;
mod interp;
mod scale;
mod signal;

pub use candidates::{extract_candidates, Candidate, CandidateMode, CandidateSet};
pub use curvature::{estimate_alpha, menger_circumradius};
pub use envelope::{
    envelope_indices, frontiers, lower_frontier, upper_frontier, Alpha, EnvelopeParams, Frontier,
    FrontierSet, DEFAULT_TOL,
};
pub use error::{EnvelopeError, Result};
pub use frontier::{alpha_frontier, next_contact, Contact, FrontierChain, START_ANGLE};
pub use interp::interpolate_frontier;
pub use scale::{normalize_and_scale, Point, ScaledPoints};
pub use signal::{find_pulses, Pulse, Sign, Signal};
