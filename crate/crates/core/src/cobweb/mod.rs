//! Cobweb posets, their Hasse digraphs and the hyper-box coding of layers.

mod hasse;
mod hyperbox;

pub use hasse::{build_hasse, permuted_subposet, HasseDigraph};
pub use hyperbox::{HyperBox, MaxChains, SubBox};

use core::fmt;

/// Vertex `<j, s>`: position `j` (1-based) on level `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub level: usize,
    pub position: usize,
}

impl Vertex {
    pub fn new(position: usize, level: usize) -> Self {
        Vertex { level, position }
    }
}

/// Prints as `j:s`.
impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.position, self.level)
    }
}

/// `<j,s> <= <k,t>` iff `s < t`, or the two are the same vertex.
pub fn poset_leq(x: Vertex, y: Vertex) -> bool {
    x.level < y.level || (x.position == y.position && x.level == y.level)
}

/// Partial orders on the product of two chains.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairOrder {
    /// Lexicographic: first coordinates decide unless equal. Total.
    Lex,
    /// Coordinatewise `<=`.
    Product,
    /// Both coordinates strictly smaller, or the pairs are equal.
    StrictReflexive,
}

pub fn pair_order<T: Ord>(kind: PairOrder, a: (T, T), b: (T, T)) -> bool {
    match kind {
        PairOrder::Lex => a.0 < b.0 || (a.0 == b.0 && a.1 <= b.1),
        PairOrder::Product => a.0 <= b.0 && a.1 <= b.1,
        PairOrder::StrictReflexive => (a.0 < b.0 && a.1 < b.1) || a == b,
    }
}
