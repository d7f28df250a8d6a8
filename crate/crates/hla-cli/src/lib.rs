//! Library side of the `hla` command-line tool: command implementations,
//! the validation check catalogue, and deterministic artifact emission.
//! The binary in `main.rs` is a thin argument-parsing shell over this.

pub mod checks;
pub mod commands;
pub mod output;
pub mod report;
pub mod svg;
