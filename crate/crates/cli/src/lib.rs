//! Command-line front end: argument parsing, output formatting, embedded
//! reference fixtures, and the cross-module verify suite.

pub mod app;
pub mod fixtures;
pub mod verify;
