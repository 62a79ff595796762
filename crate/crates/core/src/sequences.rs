//! F-sequences and the factorial-type products built on them.
//!
//! A sequence is written in upside-down notation: `n_F` is the `n`-th term.
//! Every positive index must carry a positive value. Index 0 is stored as
//! given, but products that reach it (and the root level of a cobweb poset)
//! read it as 1, so `0_F! = 1` for every sequence.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, Zero};
use spin::RwLock;

use crate::error::{Error, Result};

/// The generating rule of an [`FSequence`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceKind {
    /// `n_F = n`.
    Natural,
    /// `0_F = 1`, `1_F = 2_F = 1`, `n_F = (n-1)_F + (n-2)_F`.
    Fibonacci,
    /// `n_F = p` for every index.
    Constant(u64),
    /// Gaussian integers `n_q = 1 + q + ... + q^(n-1)`, `0_q = 0`.
    Gauss(u64),
    /// Finite list of values for indices `0, 1, 2, ...`.
    Explicit(Vec<BigUint>),
}

/// A natural-number valued sequence `n -> n_F` with an append-only memo.
pub struct FSequence {
    kind: SequenceKind,
    label: Option<String>,
    // Recurrence-defined kinds only; holds raw terms starting at index 0.
    memo: RwLock<Vec<BigUint>>,
}

impl FSequence {
    fn from_kind(kind: SequenceKind) -> Self {
        let memo = match &kind {
            SequenceKind::Fibonacci => vec![BigUint::zero(), BigUint::one()],
            SequenceKind::Gauss(_) => vec![BigUint::zero(), BigUint::one()],
            _ => Vec::new(),
        };
        FSequence {
            kind,
            label: None,
            memo: RwLock::new(memo),
        }
    }

    pub fn natural() -> Self {
        Self::from_kind(SequenceKind::Natural)
    }

    pub fn fibonacci() -> Self {
        Self::from_kind(SequenceKind::Fibonacci)
    }

    pub fn constant(p: u64) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidSequence("constant sequence must be positive".into()));
        }
        Ok(Self::from_kind(SequenceKind::Constant(p)))
    }

    pub fn gauss(q: u64) -> Self {
        Self::from_kind(SequenceKind::Gauss(q))
    }

    /// Finite sequence with values for indices `0..values.len()`. Index 0 may
    /// be zero; every later value must be positive.
    pub fn explicit(values: Vec<BigUint>) -> Result<Self> {
        if let Some(pos) = values.iter().skip(1).position(|v| v.is_zero()) {
            return Err(Error::InvalidSequence(alloc::format!(
                "value at index {} must be positive",
                pos + 1
            )));
        }
        Ok(Self::from_kind(SequenceKind::Explicit(values)))
    }

    /// Attaches the spec string used when displaying an explicit sequence,
    /// e.g. the `file:<path>` it was loaded from.
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn kind(&self) -> &SequenceKind {
        &self.kind
    }

    /// Number of defined terms, `None` for infinite sequences.
    pub fn defined_terms(&self) -> Option<usize> {
        match &self.kind {
            SequenceKind::Explicit(v) => Some(v.len()),
            _ => None,
        }
    }

    /// `n_F`.
    pub fn value(&self, n: usize) -> Result<BigUint> {
        match &self.kind {
            SequenceKind::Natural => Ok(BigUint::from(n)),
            SequenceKind::Constant(p) => Ok(BigUint::from(*p)),
            SequenceKind::Explicit(values) => {
                values.get(n).cloned().ok_or(Error::IndexBeyondExplicitList {
                    index: n,
                    len: values.len(),
                })
            }
            SequenceKind::Fibonacci if n == 0 => Ok(BigUint::one()),
            SequenceKind::Fibonacci | SequenceKind::Gauss(_) => Ok(self.memoized(n)),
        }
    }

    fn memoized(&self, n: usize) -> BigUint {
        if let Some(v) = self.memo.read().get(n) {
            return v.clone();
        }
        let mut memo = self.memo.write();
        // Another writer may have filled the table in between.
        while memo.len() <= n {
            let len = memo.len();
            let next = match &self.kind {
                SequenceKind::Fibonacci => &memo[len - 1] + &memo[len - 2],
                SequenceKind::Gauss(q) => &memo[len - 1] * *q + 1u32,
                _ => unreachable!("only recurrence kinds are memoized"),
            };
            memo.push(next);
        }
        memo[n].clone()
    }

    /// `n_F` with index 0 read as 1. This is the factor used by every
    /// factorial-type product and the width of a cobweb level.
    pub fn term(&self, n: usize) -> Result<BigUint> {
        if n == 0 {
            Ok(BigUint::one())
        } else {
            self.value(n)
        }
    }

    /// `k_F (k+1)_F ... (k+s-1)_F`, and 1 when `s = 0`.
    pub fn rising_factorial(&self, k: usize, s: usize) -> Result<BigUint> {
        let mut acc = BigUint::one();
        for i in k..k + s {
            acc *= self.term(i)?;
        }
        Ok(acc)
    }

    /// `n_F! = 1_F 2_F ... n_F`.
    pub fn f_factorial(&self, n: usize) -> Result<BigUint> {
        self.rising_factorial(1, n)
    }

    /// `n_F (n-1)_F ... (n-k+1)_F`.
    pub fn falling_factorial(&self, n: usize, k: usize) -> Result<BigUint> {
        if k > n {
            return Err(Error::InvalidRange { n, k });
        }
        self.rising_factorial(n - k + 1, k)
    }

    /// The F-nomial coefficient `n_F! / (k_F! (n-k)_F!)` as an exact fraction.
    pub fn fnomial(&self, n: usize, k: usize) -> Result<FNomial> {
        if k > n {
            return Err(Error::InvalidRange { n, k });
        }
        // n^{k falling} / k_F! is the same quotient with smaller operands.
        let numer = self.falling_factorial(n, k)?;
        let denom = self.f_factorial(k)?;
        Ok(FNomial(Ratio::new(numer, denom)))
    }

    /// Checks that every F-nomial with `0 <= k <= n <= n_max` is an integer.
    pub fn is_admissible(&self, n_max: usize) -> Result<Admissibility> {
        for n in 0..=n_max {
            for k in 0..=n {
                if !self.fnomial(n, k)?.is_integral() {
                    return Ok(Admissibility {
                        admissible: false,
                        witness: Some((n, k)),
                    });
                }
            }
        }
        Ok(Admissibility {
            admissible: true,
            witness: None,
        })
    }
}

impl Clone for FSequence {
    fn clone(&self) -> Self {
        FSequence {
            kind: self.kind.clone(),
            label: self.label.clone(),
            memo: RwLock::new(self.memo.read().clone()),
        }
    }
}

impl fmt::Debug for FSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FSequence")
            .field("kind", &self.kind)
            .field("label", &self.label)
            .finish()
    }
}

/// Two sequences are equal when they generate the same terms; labels and
/// memo state are ignored.
impl PartialEq for FSequence {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for FSequence {}

impl fmt::Display for FSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(label) = &self.label {
            return f.write_str(label);
        }
        match &self.kind {
            SequenceKind::Natural => f.write_str("natural"),
            SequenceKind::Fibonacci => f.write_str("fibonacci"),
            SequenceKind::Constant(p) => write!(f, "const:{p}"),
            SequenceKind::Gauss(q) => write!(f, "gauss:{q}"),
            SequenceKind::Explicit(values) => {
                f.write_str("list:")?;
                for (i, v) in values.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}")?;
                }
                Ok(())
            }
        }
    }
}

impl core::str::FromStr for FSequence {
    type Err = Error;

    /// Parses `natural | fibonacci | const:<p> | gauss:<q> | list:<v0,v1,...>`.
    /// The `file:` form needs IO and is handled by the command-line crate.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidSequence(alloc::format!("{msg}: {s:?}"));
        match s {
            "natural" => return Ok(Self::natural()),
            "fibonacci" => return Ok(Self::fibonacci()),
            _ => {}
        }
        let (head, arg) = s.split_once(':').ok_or_else(|| bad("unknown sequence"))?;
        match head {
            "const" => Self::constant(arg.parse().map_err(|_| bad("bad constant"))?),
            "gauss" => Ok(Self::gauss(arg.parse().map_err(|_| bad("bad base"))?)),
            "list" => Self::explicit(parse_values(arg).ok_or_else(|| bad("bad value list"))?),
            _ => Err(bad("unknown sequence")),
        }
    }
}

/// Splits a whitespace- or comma-separated list of decimal naturals.
pub fn parse_values(text: &str) -> Option<Vec<BigUint>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| BigUint::parse_bytes(t.as_bytes(), 10))
        .collect()
}

/// An exact F-nomial value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FNomial(pub Ratio<BigUint>);

impl FNomial {
    pub fn is_integral(&self) -> bool {
        self.0.is_integer()
    }

    pub fn to_integer(&self) -> Option<BigUint> {
        self.is_integral().then(|| self.0.to_integer())
    }

    pub fn numer(&self) -> &BigUint {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigUint {
        self.0.denom()
    }
}

impl fmt::Display for FNomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integral() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Admissibility {
    pub admissible: bool,
    /// First `(n, k)` whose F-nomial is not an integer.
    pub witness: Option<(usize, usize)>,
}
