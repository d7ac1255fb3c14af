//! Builtin geometry registry and the verification suites behind the `geom`
//! binary.

pub mod builtins;
pub mod suite;
