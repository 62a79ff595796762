use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::fbase::FBaseNumeral;
use crate::sequences::FSequence;

/// The discrete box `V_{k,n} = [k_F] x [(k+1)_F] x ... x [n_F]`.
///
/// Its points are the maximal chains of the layer from level `k` to level
/// `n`, and coordinate `s` of a point is a base-F digit at position `s` with
/// origin `k`. `n = k - 1` gives the empty box, whose only point is the empty
/// tuple.
#[derive(Debug, Clone)]
pub struct HyperBox {
    sequence: Arc<FSequence>,
    origin: usize,
    end: usize,
    extents: Vec<BigUint>,
}

impl PartialEq for HyperBox {
    fn eq(&self, other: &Self) -> bool {
        self.origin == other.origin && self.end == other.end && self.sequence == other.sequence
    }
}

impl Eq for HyperBox {}

impl HyperBox {
    pub fn new(sequence: Arc<FSequence>, origin: usize, end: usize) -> Result<Self> {
        if origin == 0 {
            return Err(Error::InvalidOrigin(origin));
        }
        if end + 1 < origin {
            return Err(Error::InvalidRange { n: end, k: origin });
        }
        let extents = (origin..=end)
            .map(|s| sequence.term(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(HyperBox {
            sequence,
            origin,
            end,
            extents,
        })
    }

    pub fn sequence(&self) -> &Arc<FSequence> {
        &self.sequence
    }

    pub fn origin(&self) -> usize {
        self.origin
    }

    pub fn end(&self) -> usize {
        self.end
    }

    /// Number of coordinates, `n - k + 1`.
    pub fn dims(&self) -> usize {
        self.extents.len()
    }

    /// `(k+s)_F` for each coordinate `s`.
    pub fn extents(&self) -> &[BigUint] {
        &self.extents
    }

    pub fn extents_usize(&self) -> Result<Vec<usize>> {
        self.extents
            .iter()
            .map(|e| e.to_usize().ok_or(Error::TooLarge("box extent")))
            .collect()
    }

    /// `|V_{k,n}|`, the number of maximal chains of the layer.
    pub fn cardinality(&self) -> BigUint {
        self.extents.iter().product()
    }

    pub fn count_max_chains(&self) -> BigUint {
        self.cardinality()
    }

    /// Every point of the box, in increasing `<=_V` order.
    pub fn max_chains(&self) -> Result<MaxChains> {
        Ok(MaxChains {
            extents: self.extents_usize()?,
            next: Some(alloc::vec![0; self.dims()]),
        })
    }

    pub fn contains_point(&self, point: &[usize]) -> bool {
        point.len() == self.dims()
            && point
                .iter()
                .zip(&self.extents)
                .all(|(&c, e)| BigUint::from(c) < *e)
    }

    fn check_point(&self, point: &[usize]) -> Result<()> {
        if self.contains_point(point) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    /// The point read as a base-F numeral with this box's origin.
    pub fn numeral(&self, point: &[usize]) -> Result<FBaseNumeral> {
        self.check_point(point)?;
        FBaseNumeral::new(
            self.sequence.clone(),
            self.origin,
            point.iter().map(|&c| BigUint::from(c)).collect(),
        )
    }

    /// Coordinatewise order `<=_Phi`.
    pub fn product_leq(&self, x: &[usize], y: &[usize]) -> Result<bool> {
        self.check_point(x)?;
        self.check_point(y)?;
        Ok(x.iter().zip(y).all(|(a, b)| a <= b))
    }

    pub fn join(&self, x: &[usize], y: &[usize]) -> Result<Vec<usize>> {
        self.check_point(x)?;
        self.check_point(y)?;
        Ok(x.iter().zip(y).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn meet(&self, x: &[usize], y: &[usize]) -> Result<Vec<usize>> {
        self.check_point(x)?;
        self.check_point(y)?;
        Ok(x.iter().zip(y).map(|(&a, &b)| a.min(b)).collect())
    }

    /// The interval box `[meet(x, y), join(x, y)]`.
    pub fn strip(&self, x: &[usize], y: &[usize]) -> Result<SubBox> {
        let lo = self.meet(x, y)?;
        let hi = self.join(x, y)?;
        SubBox::new(self.clone(), lo.into_iter().zip(hi).collect())
    }
}

/// Odometer over the points of a box, least significant coordinate fastest.
#[derive(Debug, Clone)]
pub struct MaxChains {
    extents: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl Iterator for MaxChains {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        for (digit, &extent) in succ.iter_mut().zip(&self.extents) {
            *digit += 1;
            if *digit < extent {
                self.next = Some(succ);
                return Some(current);
            }
            *digit = 0;
        }
        Some(current)
    }
}

/// An axis-aligned sub-box: one inclusive interval per coordinate of an
/// ambient hyper-box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubBox {
    ambient: HyperBox,
    intervals: Vec<(usize, usize)>,
}

impl SubBox {
    pub fn new(ambient: HyperBox, intervals: Vec<(usize, usize)>) -> Result<Self> {
        let ok = intervals.len() == ambient.dims()
            && intervals
                .iter()
                .zip(ambient.extents())
                .all(|(&(lo, hi), e)| lo <= hi && BigUint::from(hi) < *e);
        if !ok {
            return Err(Error::AmbientMismatch);
        }
        Ok(SubBox { ambient, intervals })
    }

    /// The whole ambient box.
    pub fn full(ambient: HyperBox) -> Result<Self> {
        let intervals = ambient
            .extents_usize()?
            .into_iter()
            .map(|e| (0, e - 1))
            .collect();
        Self::new(ambient, intervals)
    }

    pub fn point(ambient: HyperBox, point: &[usize]) -> Result<Self> {
        Self::new(ambient, point.iter().map(|&c| (c, c)).collect())
    }

    pub fn ambient(&self) -> &HyperBox {
        &self.ambient
    }

    pub fn intervals(&self) -> &[(usize, usize)] {
        &self.intervals
    }

    /// Box inclusion: every interval of `inner` lies within the matching
    /// interval of `self`.
    pub fn contains(&self, inner: &SubBox) -> Result<bool> {
        if self.ambient != inner.ambient {
            return Err(Error::AmbientMismatch);
        }
        Ok(self
            .intervals
            .iter()
            .zip(&inner.intervals)
            .all(|(&(lo, hi), &(ilo, ihi))| lo <= ilo && ihi <= hi))
    }

    pub fn contains_point(&self, point: &[usize]) -> bool {
        point.len() == self.intervals.len()
            && point
                .iter()
                .zip(&self.intervals)
                .all(|(c, (lo, hi))| lo <= c && c <= hi)
    }
}
