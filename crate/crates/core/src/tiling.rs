//! Cobweb tiles and exhaustive enumeration of cobweb tilings of a hyper-box.
//!
//! A tile of an `m`-dimensional box picks a permutation `sigma` of `1..=m`
//! and, for each coordinate `s`, a subset `A_s` of that coordinate's range
//! with `|A_s| = sigma(s)_F`; its points are the Cartesian product of the
//! `A_s`, so every tile has `m_F!` points. A tiling is a partition of the box
//! into tiles.
//!
//! Tilings are generated by always covering the least uncovered point (in
//! increasing `<=_V` order, i.e. by point index) with every tile that has it
//! as its own least point and misses the covered region. Each tiling is then
//! produced exactly once, and the output order depends only on the box.

use alloc::vec::Vec;
use core::ops::{ControlFlow, Range};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::cobweb::HyperBox;
use crate::error::{Error, Result};
use crate::perm::{combinations, is_permutation, permutations};
use crate::sequences::FSequence;

/// Default bound on the number of box points the search accepts.
pub const DEFAULT_POINT_LIMIT: usize = 64;

/// Boxes above this many points are never materialized for verification.
const VERIFY_POINT_CAP: usize = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TilingOptions {
    /// Largest box (in points) the search will attempt. The number of tilings
    /// grows explosively with the box, so raise this with care.
    pub limit: usize,
    /// Restrict tiles to products of contiguous intervals.
    pub intervals_only: bool,
}

impl Default for TilingOptions {
    fn default() -> Self {
        TilingOptions {
            limit: DEFAULT_POINT_LIMIT,
            intervals_only: false,
        }
    }
}

/// Tile sizes for one permutation: `sizes[s] = sigma(s)_F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TileShape {
    pub sigma: Vec<usize>,
    pub sizes: Vec<usize>,
}

impl TileShape {
    pub fn placeable_in(&self, hyper_box: &HyperBox) -> bool {
        self.sizes.len() == hyper_box.dims()
            && self
                .sizes
                .iter()
                .zip(hyper_box.extents())
                .all(|(&size, extent)| BigUint::from(size) <= *extent)
    }

    /// The tile anchored at the origin: `A_s = {0, ..., sigma(s)_F - 1}`.
    pub fn anchored(&self) -> Tile {
        Tile {
            sigma: self.sigma.clone(),
            subsets: self.sizes.iter().map(|&n| (0..n).collect()).collect(),
        }
    }
}

fn part_sizes(sequence: &FSequence, m: usize) -> Result<Vec<usize>> {
    (1..=m)
        .map(|i| sequence.term(i)?.to_usize().ok_or(Error::TooLarge("tile size")))
        .collect()
}

/// One shape per permutation of `1..=m`, in lexicographic order of `sigma`.
pub fn canonical_tiles(sequence: &FSequence, m: usize) -> Result<Vec<TileShape>> {
    let parts = part_sizes(sequence, m)?;
    Ok(permutations(m)
        .into_iter()
        .map(|sigma| {
            let sizes = sigma.iter().map(|&p| parts[p - 1]).collect();
            TileShape { sigma, sizes }
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tile {
    /// 1-based permutation of the coordinates' size classes.
    pub sigma: Vec<usize>,
    /// Sorted 0-based indices chosen in each coordinate.
    pub subsets: Vec<Vec<usize>>,
}

impl Tile {
    pub fn cardinality(&self) -> usize {
        self.subsets.iter().map(Vec::len).product()
    }

    pub fn contains(&self, point: &[usize]) -> bool {
        point.len() == self.subsets.len()
            && point
                .iter()
                .zip(&self.subsets)
                .all(|(c, subset)| subset.binary_search(c).is_ok())
    }

    /// The tile's points, least significant coordinate fastest.
    pub fn points(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::with_capacity(self.cardinality());
        if self.subsets.iter().any(Vec::is_empty) {
            return out;
        }
        let mut cursor = alloc::vec![0usize; self.subsets.len()];
        loop {
            out.push(cursor.iter().zip(&self.subsets).map(|(&i, s)| s[i]).collect());
            let mut s = 0;
            loop {
                if s == cursor.len() {
                    return out;
                }
                cursor[s] += 1;
                if cursor[s] < self.subsets[s].len() {
                    break;
                }
                cursor[s] = 0;
                s += 1;
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tiling {
    pub hyper_box: HyperBox,
    pub tiles: Vec<Tile>,
}

/// Why a list of tiles fails to be a cobweb tiling.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Violation {
    #[error("box is too large to verify")]
    BoxTooLarge,
    #[error("tile {tile} has the wrong number of coordinates")]
    DimensionMismatch { tile: usize },
    #[error("tile {tile} has an invalid permutation")]
    InvalidSigma { tile: usize },
    #[error("tile {tile} has an unsorted or out-of-range subset in coordinate {dim}")]
    MalformedSubset { tile: usize, dim: usize },
    #[error("tile {tile} has the wrong subset size in coordinate {dim}")]
    SubsetSize { tile: usize, dim: usize },
    #[error("tiles {first} and {second} overlap at point {point:?}")]
    Overlap {
        first: usize,
        second: usize,
        point: Vec<usize>,
    },
    #[error("point {point:?} is not covered")]
    Uncovered { point: Vec<usize> },
}

fn strides(extents: &[usize]) -> Vec<usize> {
    let mut acc = 1;
    extents
        .iter()
        .map(|&e| {
            let s = acc;
            acc *= e;
            s
        })
        .collect()
}

fn point_of(mut index: usize, extents: &[usize]) -> Vec<usize> {
    extents
        .iter()
        .map(|&e| {
            let c = index % e;
            index /= e;
            c
        })
        .collect()
}

impl Tiling {
    /// Owning tile index of every box point, indexed like
    /// [`HyperBox::max_chains`]. Fails with the first violation found.
    pub fn cell_labels(&self) -> Result<Vec<usize>, Violation> {
        let b = &self.hyper_box;
        let extents = b.extents_usize().map_err(|_| Violation::BoxTooLarge)?;
        let total = b
            .cardinality()
            .to_usize()
            .filter(|&n| n <= VERIFY_POINT_CAP)
            .ok_or(Violation::BoxTooLarge)?;
        let m = b.dims();
        let parts = part_sizes(b.sequence(), m).map_err(|_| Violation::BoxTooLarge)?;
        let stride = strides(&extents);
        let mut owner: Vec<Option<usize>> = alloc::vec![None; total];
        for (t, tile) in self.tiles.iter().enumerate() {
            if tile.sigma.len() != m || tile.subsets.len() != m {
                return Err(Violation::DimensionMismatch { tile: t });
            }
            if !is_permutation(&tile.sigma) {
                return Err(Violation::InvalidSigma { tile: t });
            }
            for (dim, subset) in tile.subsets.iter().enumerate() {
                let sorted = subset.windows(2).all(|w| w[0] < w[1]);
                if !sorted || subset.last().is_some_and(|&c| c >= extents[dim]) {
                    return Err(Violation::MalformedSubset { tile: t, dim });
                }
                if subset.len() != parts[tile.sigma[dim] - 1] {
                    return Err(Violation::SubsetSize { tile: t, dim });
                }
            }
            for point in tile.points() {
                let index: usize = point.iter().zip(&stride).map(|(c, s)| c * s).sum();
                if let Some(first) = owner[index].replace(t) {
                    return Err(Violation::Overlap {
                        first,
                        second: t,
                        point,
                    });
                }
            }
        }
        owner
            .into_iter()
            .enumerate()
            .map(|(i, o)| {
                o.ok_or_else(|| Violation::Uncovered {
                    point: point_of(i, &extents),
                })
            })
            .collect()
    }
}

/// Checks disjointness, cover, and the size constraint of every tile.
pub fn verify_tiling(tiling: &Tiling) -> Result<(), Violation> {
    tiling.cell_labels().map(|_| ())
}

/// `|box| / m_F!`, the number of tiles in any tiling of the box.
pub fn tiles_per_tiling(hyper_box: &HyperBox) -> Result<BigUint> {
    let tile = hyper_box.sequence().f_factorial(hyper_box.dims())?;
    let (q, r) = hyper_box.cardinality().div_rem(&tile);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::NonDivisible)
    }
}

#[derive(Debug, Clone)]
struct Placement {
    shape: usize,
    subsets: Vec<Vec<usize>>,
    mask: Vec<u64>,
}

/// Exact-cover search over all tile placements in a box of given extents.
///
/// `part_sizes[i]` is the size class `(i+1)_F`; a tile assigns the classes to
/// coordinates by a permutation. Boxes built from a sequence use
/// [`TilingSearch::for_box`]; the general constructor also admits boxes whose
/// extents are not consecutive sequence terms.
#[derive(Debug, Clone)]
pub struct TilingSearch {
    points: usize,
    shapes: Vec<TileShape>,
    placements: Vec<Placement>,
    // Placements whose least point is `p` occupy `by_anchor[p]`.
    by_anchor: Vec<Range<usize>>,
    // Bits past `points` are permanently set.
    initial: Vec<u64>,
}

impl TilingSearch {
    pub fn new(extents: &[usize], part_sizes: &[usize], options: TilingOptions) -> Result<Self> {
        if extents.len() != part_sizes.len() {
            return Err(Error::AmbientMismatch);
        }
        let points = extents
            .iter()
            .try_fold(1usize, |acc, &e| acc.checked_mul(e))
            .unwrap_or(usize::MAX);
        if points > options.limit {
            return Err(Error::SearchLimitExceeded {
                points,
                limit: options.limit,
            });
        }
        let words = points.div_ceil(64).max(1);
        let stride = strides(extents);

        // Equal size classes make several sigmas describe the same point sets;
        // keep the lexicographically first sigma for each size vector.
        let mut shapes: Vec<TileShape> = Vec::new();
        for sigma in permutations(extents.len()) {
            let sizes: Vec<usize> = sigma.iter().map(|&p| part_sizes[p - 1]).collect();
            let fits = sizes.iter().zip(extents).all(|(s, e)| s <= e);
            if fits && !shapes.iter().any(|sh| sh.sizes == sizes) {
                shapes.push(TileShape { sigma, sizes });
            }
        }

        let mut placements = Vec::new();
        for (shape_index, shape) in shapes.iter().enumerate() {
            let choices: Vec<Vec<Vec<usize>>> = shape
                .sizes
                .iter()
                .zip(extents)
                .map(|(&size, &extent)| {
                    if options.intervals_only {
                        (0..=extent - size).map(|lo| (lo..lo + size).collect()).collect()
                    } else {
                        combinations(extent, size)
                    }
                })
                .collect();
            let mut cursor = alloc::vec![0usize; choices.len()];
            loop {
                let subsets: Vec<Vec<usize>> = cursor
                    .iter()
                    .zip(&choices)
                    .map(|(&i, c)| c[i].clone())
                    .collect();
                let tile = Tile {
                    sigma: shape.sigma.clone(),
                    subsets,
                };
                let mut mask = alloc::vec![0u64; words];
                for p in tile.points() {
                    let index: usize = p.iter().zip(&stride).map(|(c, s)| c * s).sum();
                    mask[index / 64] |= 1 << (index % 64);
                }
                placements.push(Placement {
                    shape: shape_index,
                    subsets: tile.subsets,
                    mask,
                });
                let mut s = 0;
                while s < cursor.len() {
                    cursor[s] += 1;
                    if cursor[s] < choices[s].len() {
                        break;
                    }
                    cursor[s] = 0;
                    s += 1;
                }
                if s == cursor.len() {
                    break;
                }
            }
        }

        let anchor = |p: &Placement| -> usize {
            p.subsets
                .iter()
                .zip(&stride)
                .map(|(subset, s)| subset[0] * s)
                .sum()
        };
        placements.sort_by_key(anchor);
        let mut by_anchor = alloc::vec![0..0; points];
        let mut start = 0;
        while start < placements.len() {
            let a = anchor(&placements[start]);
            let mut end = start;
            while end < placements.len() && anchor(&placements[end]) == a {
                end += 1;
            }
            by_anchor[a] = start..end;
            start = end;
        }

        let mut initial = alloc::vec![0u64; words];
        for index in points..words * 64 {
            initial[index / 64] |= 1 << (index % 64);
        }
        Ok(TilingSearch {
            points,
            shapes,
            placements,
            by_anchor,
            initial,
        })
    }

    /// Search over `V_{k,n}` with size classes `1_F, ..., m_F`.
    pub fn for_box(hyper_box: &HyperBox, options: TilingOptions) -> Result<Self> {
        let points = hyper_box.cardinality().to_usize().unwrap_or(usize::MAX);
        if points > options.limit {
            return Err(Error::SearchLimitExceeded {
                points,
                limit: options.limit,
            });
        }
        let extents = hyper_box.extents_usize()?;
        let parts = part_sizes(hyper_box.sequence(), hyper_box.dims())?;
        Self::new(&extents, &parts, options)
    }

    pub fn points(&self) -> usize {
        self.points
    }

    /// Distinct placeable size vectors, each with its smallest sigma.
    pub fn shapes(&self) -> &[TileShape] {
        &self.shapes
    }

    pub fn placement_count(&self) -> usize {
        self.placements.len()
    }

    /// Number of top-level branches (placements covering point 0). Visiting
    /// the branches in index order reproduces the full enumeration order.
    pub fn branches(&self) -> usize {
        self.by_anchor.first().map_or(0, |r| r.len())
    }

    /// Builds the tiles of a placement list reported to a visitor.
    pub fn tiles(&self, chosen: &[usize]) -> Vec<Tile> {
        chosen
            .iter()
            .map(|&i| {
                let p = &self.placements[i];
                Tile {
                    sigma: self.shapes[p.shape].sigma.clone(),
                    subsets: p.subsets.clone(),
                }
            })
            .collect()
    }

    /// Visits every tiling whose first tile is top-level branch `branch`.
    pub fn visit_branch<F>(&self, branch: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let Some(range) = self.by_anchor.first() else {
            return ControlFlow::Continue(());
        };
        if branch >= range.len() {
            return ControlFlow::Continue(());
        }
        let first = range.start + branch;
        let mut covered = self.initial.clone();
        for (c, m) in covered.iter_mut().zip(&self.placements[first].mask) {
            *c |= m;
        }
        let mut chosen = alloc::vec![first];
        self.descend(&mut covered, &mut chosen, visit)
    }

    /// Visits every tiling as a list of placement indices, in canonical order.
    pub fn visit<F>(&self, mut visit: F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        for branch in 0..self.branches() {
            self.visit_branch(branch, &mut visit)?;
        }
        ControlFlow::Continue(())
    }

    pub fn count(&self) -> u64 {
        let mut n = 0u64;
        let _ = self.visit(|_| {
            n += 1;
            ControlFlow::Continue(())
        });
        n
    }

    fn descend<F>(&self, covered: &mut [u64], chosen: &mut Vec<usize>, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let Some(next) = covered
            .iter()
            .position(|&w| w != u64::MAX)
            .map(|i| i * 64 + (!covered[i]).trailing_zeros() as usize)
        else {
            return visit(chosen);
        };
        for i in self.by_anchor[next].clone() {
            let mask = &self.placements[i].mask;
            if covered.iter().zip(mask).any(|(c, m)| c & m != 0) {
                continue;
            }
            for (c, m) in covered.iter_mut().zip(mask) {
                *c |= m;
            }
            chosen.push(i);
            let flow = self.descend(covered, chosen, visit);
            chosen.pop();
            for (c, m) in covered.iter_mut().zip(mask) {
                *c &= !m;
            }
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Calls `visit` on every tiling of the box in canonical order.
pub fn for_each_tiling<F>(hyper_box: &HyperBox, options: TilingOptions, mut visit: F) -> Result<()>
where
    F: FnMut(Tiling) -> ControlFlow<()>,
{
    let search = TilingSearch::for_box(hyper_box, options)?;
    let _ = search.visit(|chosen| {
        visit(Tiling {
            hyper_box: hyper_box.clone(),
            tiles: search.tiles(chosen),
        })
    });
    Ok(())
}

pub fn enumerate_tilings(hyper_box: &HyperBox, options: TilingOptions) -> Result<Vec<Tiling>> {
    let mut all = Vec::new();
    for_each_tiling(hyper_box, options, |t| {
        all.push(t);
        ControlFlow::Continue(())
    })?;
    Ok(all)
}

pub fn count_tilings(hyper_box: &HyperBox, options: TilingOptions) -> Result<u64> {
    Ok(TilingSearch::for_box(hyper_box, options)?.count())
}
