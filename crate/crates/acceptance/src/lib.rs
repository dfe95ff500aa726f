//! Test-only crate; the acceptance criteria live in `tests/acceptance.rs`.
