//! Base-F numeral systems and the cobweb structures they coordinatize.
//!
//! A natural-number valued sequence `F` (written `n_F` for its `n`-th term)
//! defines:
//!
//! - the [`fbase`] mixed-radix system, where position `s` counted from origin
//!   `k` has radix `(k+s)_F`;
//! - the cobweb poset whose level `s` has `s_F` vertices, each level joined
//!   to the next by a complete bipartite digraph ([`cobweb`]);
//! - the hyper-box `V_{k,n}` of maximal chains between levels `k` and `n`,
//!   whose points are exactly the base-F digit vectors of that length;
//! - F-nomial coefficients and factorial-type products ([`sequences`]);
//! - cobweb tiles and tilings of hyper-boxes ([`tiling`]).
//!
//! All arithmetic is exact. The crate is `no_std` and needs only `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cobweb;
mod error;
pub mod fbase;
mod perm;
pub mod sequences;
pub mod tiling;

pub use error::{Error, Result};
pub use fbase::FBaseNumeral;
pub use sequences::{FSequence, SequenceKind};

pub use num_bigint::BigUint;
