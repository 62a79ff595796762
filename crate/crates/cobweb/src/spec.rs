//! Sequence specs, including the `file:<path>` form the core cannot read.

use std::fs;

use cobweb_core::sequences::parse_values;
use cobweb_core::FSequence;

use crate::error::{CliError, Result};

/// Parses `natural | fibonacci | const:<p> | gauss:<q> | list:<v,...> | file:<path>`.
///
/// A file holds whitespace- or comma-separated decimal values for indices
/// 0, 1, 2, .... The resulting sequence prints back as the original spec.
pub fn parse_sequence(spec: &str) -> Result<FSequence> {
    let Some(path) = spec.strip_prefix("file:") else {
        return Ok(spec.parse()?);
    };
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let values = parse_values(&text)
        .ok_or_else(|| CliError::Invalid(format!("{path}: expected decimal naturals")))?;
    Ok(FSequence::explicit(values)?.with_label(spec))
}
