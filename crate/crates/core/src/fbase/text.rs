//! Digit-string form `(c_m ... c_1 c_0)_F`, most significant digit first.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use super::FBaseNumeral;
use crate::error::{Error, Result};
use crate::sequences::FSequence;

impl fmt::Display for FBaseNumeral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        if self.digits.is_empty() {
            f.write_str("0")?;
        }
        for (i, d) in self.digits.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")_F")
    }
}

/// Parses `"(" digit (" " digit)* ")_F"` and returns the digits least
/// significant first, without normalizing.
pub fn parse_digits(input: &str) -> Result<Vec<BigUint>> {
    let bytes = input.as_bytes();
    let err = |position, reason| Error::Parse { position, reason };
    if bytes.first() != Some(&b'(') {
        return Err(err(0, "expected '('"));
    }
    let mut digits = Vec::new();
    let mut pos = 1;
    loop {
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if pos == start {
            return Err(err(pos, "expected a decimal digit"));
        }
        digits.push(BigUint::parse_bytes(&bytes[start..pos], 10).expect("ascii digits"));
        match bytes.get(pos) {
            Some(b' ') => pos += 1,
            Some(b')') => {
                pos += 1;
                break;
            }
            _ => return Err(err(pos, "expected ' ' or ')'")),
        }
    }
    if &bytes[pos..] != b"_F" {
        return Err(err(pos, "expected trailing \"_F\""));
    }
    digits.reverse();
    Ok(digits)
}

impl FBaseNumeral {
    /// Parses a digit string and checks it against the radices of
    /// `sequence` at `origin`.
    pub fn parse(input: &str, sequence: Arc<FSequence>, origin: usize) -> Result<Self> {
        Self::new(sequence, origin, parse_digits(input)?)
    }
}
