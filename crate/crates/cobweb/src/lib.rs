//! Command-line front end and file formats for `cobweb-core`: sequences read
//! from files, JSON and DOT export, tiling pictures, and a parallel tiling
//! search.

pub mod cli;
pub mod dot;
mod error;
pub mod json;
pub mod parallel;
pub mod render;
pub mod spec;

pub use error::{CliError, Result};
