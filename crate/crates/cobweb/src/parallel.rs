//! Tiling search spread over a thread pool. Each top-level branch is
//! searched on its own, and results are merged in branch order, so output
//! matches the sequential enumeration exactly.

use std::ops::ControlFlow;

use cobweb_core::cobweb::HyperBox;
use cobweb_core::tiling::{Tiling, TilingOptions, TilingSearch};
use rayon::prelude::*;

pub fn enumerate_tilings(hyper_box: &HyperBox, options: TilingOptions) -> cobweb_core::Result<Vec<Tiling>> {
    let search = TilingSearch::for_box(hyper_box, options)?;
    let per_branch: Vec<Vec<Tiling>> = (0..search.branches())
        .into_par_iter()
        .map(|branch| {
            let mut found = Vec::new();
            let _ = search.visit_branch(branch, &mut |chosen| {
                found.push(Tiling {
                    hyper_box: hyper_box.clone(),
                    tiles: search.tiles(chosen),
                });
                ControlFlow::Continue(())
            });
            found
        })
        .collect();
    Ok(per_branch.into_iter().flatten().collect())
}

pub fn count_tilings(hyper_box: &HyperBox, options: TilingOptions) -> cobweb_core::Result<u64> {
    let search = TilingSearch::for_box(hyper_box, options)?;
    Ok((0..search.branches())
        .into_par_iter()
        .map(|branch| {
            let mut n = 0u64;
            let _ = search.visit_branch(branch, &mut |_| {
                n += 1;
                ControlFlow::Continue(())
            });
            n
        })
        .sum())
}
