//! JSON formats, commands and the reproduction harness behind the `coxk3`
//! binary.

pub mod commands;
pub mod input;
pub mod json;
pub mod verify;

pub use commands::{run, Cli, Command, Output};
