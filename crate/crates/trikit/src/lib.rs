//! Command-line companion for the triangular-partition toolkit:
//! JSON/CSV/DOT serialization and the `verify` oracle harness.

pub mod dot;
pub mod json;
pub mod verify;

pub use trikit_core;
