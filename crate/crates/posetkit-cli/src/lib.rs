//! Parsing, serialization, and DOT rendering for the `posetkit` binary,
//! exposed as a library so integration tests can reuse them.

pub mod dot;
pub mod format;
