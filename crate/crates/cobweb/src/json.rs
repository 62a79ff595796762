//! JSON wire formats for numerals, tilings and Hasse digraphs.
//!
//! Integers that may be large (digits, extents) are written as JSON numbers
//! of arbitrary length, never as strings.

use std::str::FromStr;
use std::sync::Arc;

use cobweb_core::cobweb::{HasseDigraph, HyperBox};
use cobweb_core::tiling::{Tile, Tiling};
use cobweb_core::{BigUint, FBaseNumeral, FSequence};
use serde::{Deserialize, Serialize};
use serde_json::Number;

use crate::error::{CliError, Result};
use crate::spec::parse_sequence;

pub fn big_to_number(x: &BigUint) -> Number {
    Number::from_str(&x.to_string()).expect("decimal digits form a JSON number")
}

pub fn number_to_big(n: &Number) -> Result<BigUint> {
    BigUint::from_str(&n.to_string())
        .map_err(|_| CliError::Invalid(format!("expected a non-negative integer, got {n}")))
}

/// `{"sequence": spec, "origin": k, "digits_lsb": [c_0, c_1, ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NumeralJson {
    pub sequence: String,
    pub origin: usize,
    pub digits_lsb: Vec<Number>,
}

impl NumeralJson {
    pub fn from_numeral(x: &FBaseNumeral) -> Self {
        let digits_lsb = if x.is_zero() {
            vec![Number::from(0u8)]
        } else {
            x.digits().iter().map(big_to_number).collect()
        };
        NumeralJson {
            sequence: x.sequence().to_string(),
            origin: x.origin(),
            digits_lsb,
        }
    }

    pub fn to_numeral(&self) -> Result<FBaseNumeral> {
        let seq = Arc::new(parse_sequence(&self.sequence)?);
        self.to_numeral_over(seq)
    }

    /// Like [`to_numeral`](Self::to_numeral) but reuses an already loaded
    /// sequence, which must print as `self.sequence`.
    pub fn to_numeral_over(&self, seq: Arc<FSequence>) -> Result<FBaseNumeral> {
        if seq.to_string() != self.sequence {
            return Err(cobweb_core::Error::SequenceMismatch.into());
        }
        let digits = self.digits_lsb.iter().map(number_to_big).collect::<Result<_>>()?;
        Ok(FBaseNumeral::new(seq, self.origin, digits)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoxJson {
    pub sequence: String,
    pub origin: usize,
    pub end: usize,
    pub extents: Vec<Number>,
}

impl BoxJson {
    pub fn from_box(b: &HyperBox) -> Self {
        BoxJson {
            sequence: b.sequence().to_string(),
            origin: b.origin(),
            end: b.end(),
            extents: b.extents().iter().map(big_to_number).collect(),
        }
    }

    pub fn to_box(&self) -> Result<HyperBox> {
        let seq = Arc::new(parse_sequence(&self.sequence)?);
        let b = HyperBox::new(seq, self.origin, self.end)?;
        let extents = self.extents.iter().map(number_to_big).collect::<Result<Vec<_>>>()?;
        if extents != b.extents() {
            return Err(CliError::Invalid(
                "box extents disagree with its sequence and range".into(),
            ));
        }
        Ok(b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TileJson {
    /// 1-based permutation.
    pub sigma: Vec<usize>,
    /// Sorted 0-based indices per coordinate.
    pub subsets: Vec<Vec<usize>>,
}

/// `{"box": {...}, "tiles": [{"sigma": [...], "subsets": [[...], ...]}, ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TilingJson {
    #[serde(rename = "box")]
    pub hyper_box: BoxJson,
    pub tiles: Vec<TileJson>,
}

impl TilingJson {
    pub fn from_tiling(t: &Tiling) -> Self {
        TilingJson {
            hyper_box: BoxJson::from_box(&t.hyper_box),
            tiles: t
                .tiles
                .iter()
                .map(|tile| TileJson {
                    sigma: tile.sigma.clone(),
                    subsets: tile.subsets.clone(),
                })
                .collect(),
        }
    }

    /// Rebuilds the tiling without checking it; see
    /// [`verify_tiling`](cobweb_core::tiling::verify_tiling).
    pub fn to_tiling(&self) -> Result<Tiling> {
        Ok(Tiling {
            hyper_box: self.hyper_box.to_box()?,
            tiles: self
                .tiles
                .iter()
                .map(|t| Tile {
                    sigma: t.sigma.clone(),
                    subsets: t.subsets.clone(),
                })
                .collect(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LevelJson {
    pub level: usize,
    pub vertices: Vec<String>,
}

/// Levels bottom-up with `"j:s"` vertex labels, and arcs as label pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HasseJson {
    pub sequence: String,
    pub levels: Vec<LevelJson>,
    pub arcs: Vec<[String; 2]>,
}

impl HasseJson {
    pub fn from_graph(sequence: &FSequence, g: &HasseDigraph) -> Self {
        HasseJson {
            sequence: sequence.to_string(),
            levels: g
                .levels()
                .iter()
                .map(|level| LevelJson {
                    level: level.first().map_or(0, |v| v.level),
                    vertices: level.iter().map(ToString::to_string).collect(),
                })
                .collect(),
            arcs: g
                .arcs()
                .iter()
                .map(|(a, b)| [a.to_string(), b.to_string()])
                .collect(),
        }
    }
}
