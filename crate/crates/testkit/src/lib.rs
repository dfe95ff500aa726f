//! Reference oracles used only by tests.
//!
//! Nothing in here may call into `envelope-core`: every routine works on plain
//! `(x, y)` tuples and sample slices so the checks stay independent of the
//! code paths they verify.

pub mod corpus;
pub mod geometry;
pub mod signals;
