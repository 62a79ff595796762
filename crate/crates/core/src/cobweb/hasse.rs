use alloc::vec::Vec;

use num_traits::ToPrimitive;

use super::Vertex;
use crate::error::{Error, Result};
use crate::perm::is_permutation;
use crate::sequences::FSequence;

/// Refuse to materialize digraphs with more arcs than this.
pub const MAX_ARCS: usize = 10_000_000;

/// A chain of complete bipartite digraphs: every vertex on a level has an arc
/// to every vertex on the next level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseDigraph {
    levels: Vec<Vec<Vertex>>,
    arcs: Vec<(Vertex, Vertex)>,
}

impl HasseDigraph {
    /// Builds levels labelled `first_level, first_level + 1, ...` with the
    /// given widths.
    fn from_widths(first_level: usize, widths: &[usize]) -> Result<Self> {
        let arc_count = widths
            .windows(2)
            .try_fold(0usize, |acc, w| acc.checked_add(w[0].checked_mul(w[1])?))
            .filter(|&n| n <= MAX_ARCS)
            .ok_or(Error::TooLarge("digraph"))?;
        let levels: Vec<Vec<Vertex>> = widths
            .iter()
            .enumerate()
            .map(|(i, &w)| (1..=w).map(|j| Vertex::new(j, first_level + i)).collect())
            .collect();
        let mut arcs = Vec::with_capacity(arc_count);
        for pair in levels.windows(2) {
            for &from in &pair[0] {
                for &to in &pair[1] {
                    arcs.push((from, to));
                }
            }
        }
        Ok(HasseDigraph { levels, arcs })
    }

    pub fn levels(&self) -> &[Vec<Vertex>] {
        &self.levels
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    /// Counts paths from the vertices of level index `from` to those of level
    /// index `to` (indices into [`levels`](Self::levels)) by walking the
    /// arc list depth first.
    pub fn count_paths(&self, from: usize, to: usize) -> u64 {
        if from > to || to >= self.levels.len() {
            return 0;
        }
        // Dense ids: vertices laid out level after level.
        let mut offset = Vec::with_capacity(self.levels.len());
        let mut total = 0;
        for level in &self.levels {
            offset.push(total);
            total += level.len();
        }
        let first = self.levels[0].first().map_or(0, |v| v.level);
        let id = |v: &Vertex| offset[v.level - first] + v.position - 1;
        let mut adjacency: Vec<Vec<usize>> = alloc::vec![Vec::new(); total];
        for (a, b) in &self.arcs {
            adjacency[id(a)].push(id(b));
        }
        let sink = offset[to]..offset[to] + self.levels[to].len();
        let mut count = 0;
        let mut stack: Vec<usize> = (offset[from]..offset[from] + self.levels[from].len()).collect();
        while let Some(v) = stack.pop() {
            if sink.contains(&v) {
                count += 1;
            } else {
                stack.extend_from_slice(&adjacency[v]);
            }
        }
        count
    }
}

fn width(sequence: &FSequence, n: usize) -> Result<usize> {
    sequence.term(n)?.to_usize().ok_or(Error::TooLarge("level"))
}

/// The Hasse digraph of `P_n`: levels `0..=n` with widths `0_F, ..., n_F`,
/// where the root level always has a single vertex.
pub fn build_hasse(sequence: &FSequence, n: usize) -> Result<HasseDigraph> {
    let widths = (0..=n).map(|s| width(sequence, s)).collect::<Result<Vec<_>>>()?;
    HasseDigraph::from_widths(0, &widths)
}

/// Levels `1..=m` with widths `sigma(1)_F, ..., sigma(m)_F`.
pub fn permuted_subposet(sequence: &FSequence, m: usize, sigma: &[usize]) -> Result<HasseDigraph> {
    if sigma.len() != m || !is_permutation(sigma) {
        return Err(Error::InvalidPermutation(m));
    }
    let widths = sigma
        .iter()
        .map(|&s| width(sequence, s))
        .collect::<Result<Vec<_>>>()?;
    HasseDigraph::from_widths(1, &widths)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_p4() {
        let g = build_hasse(&FSequence::fibonacci(), 4).unwrap();
        assert_eq!(g.level_sizes(), [1, 1, 1, 2, 3]);
        assert_eq!(g.arcs().len(), 10);
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.count_paths(1, 4), 6);
    }

    #[test]
    fn natural_p3_and_trivial() {
        let g = build_hasse(&FSequence::natural(), 3).unwrap();
        assert_eq!(g.level_sizes(), [1, 1, 2, 3]);
        assert_eq!(g.arcs().len(), 9);
        let g0 = build_hasse(&FSequence::gauss(2), 0).unwrap();
        assert_eq!(g0.level_sizes(), [1]);
        assert!(g0.arcs().is_empty());
        assert_eq!(g0.count_paths(0, 0), 1);
    }

    #[test]
    fn permuted() {
        let nat = FSequence::natural();
        let g = permuted_subposet(&nat, 3, &[2, 1, 3]).unwrap();
        assert_eq!(g.level_sizes(), [2, 1, 3]);
        assert_eq!(g.levels()[0][0].level, 1);
        let id = permuted_subposet(&nat, 3, &[1, 2, 3]).unwrap();
        assert_eq!(id.level_sizes(), [1, 2, 3]);
        assert_eq!(g.vertex_count(), id.vertex_count());
        assert_eq!(
            permuted_subposet(&nat, 3, &[1, 1, 3]),
            Err(Error::InvalidPermutation(3))
        );
        assert_eq!(
            permuted_subposet(&nat, 2, &[1, 2, 3]),
            Err(Error::InvalidPermutation(2))
        );
    }

    #[test]
    fn refuses_huge() {
        let big = FSequence::constant(1 << 20).unwrap();
        assert_eq!(build_hasse(&big, 3), Err(Error::TooLarge("digraph")));
    }
}
