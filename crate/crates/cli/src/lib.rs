//! Command-line front end for twisted quantum doubles: spec parsing and the
//! `check-cocycle`, `verify`, `ribbon` and `export` commands.

pub mod command;
pub mod session;

pub use command::{render, run, sha256_hex, Command, Failure, Flags, Outcome};
pub use session::{CocycleSpec, HopfSpec, RunOptions, SessionSpec};
