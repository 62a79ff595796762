//! Independent oracles. None of these call into the code paths they check:
//! they work on plain `u64`/`u128` values and their own enumerations.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use cobweb_core::FSequence;

/// The sequences exercised by every suite.
pub fn builtins() -> Vec<(&'static str, Arc<FSequence>)> {
    ["natural", "fibonacci", "const:2", "const:10", "gauss:2"]
        .into_iter()
        .map(|s| (s, Arc::new(s.parse().unwrap())))
        .collect()
}

/// Terms of the built-in sequences with plain integers, index 0 read as 1.
pub fn term_oracle(spec: &str, n: usize) -> u128 {
    if n == 0 {
        return 1;
    }
    match spec {
        "natural" => n as u128,
        "fibonacci" => {
            let (mut a, mut b) = (0u128, 1u128);
            for _ in 1..n {
                (a, b) = (b, a + b);
            }
            b
        }
        "const:2" => 2,
        "const:10" => 10,
        "gauss:2" => (1u128 << n) - 1,
        "gauss:3" => (3u128.pow(n as u32) - 1) / 2,
        other => panic!("no oracle for {other}"),
    }
}

/// Pascal's triangle.
pub fn pascal(n: usize) -> Vec<Vec<u128>> {
    let mut rows: Vec<Vec<u128>> = vec![vec![1]];
    for i in 1..=n {
        let prev = &rows[i - 1];
        let mut row = vec![1u128; i + 1];
        for k in 1..i {
            row[k] = prev[k - 1] + prev[k];
        }
        rows.push(row);
    }
    rows
}

/// Fibonomial triangle from `[n,k] = F_{k+1} [n-1,k] + F_{n-k-1} [n-1,k-1]`,
/// with the classical `F_0 = 0, F_1 = 1`.
pub fn fibonomial(n: usize, k: usize) -> u128 {
    fn fib(i: usize) -> u128 {
        let (mut a, mut b) = (0u128, 1u128);
        for _ in 0..i {
            (a, b) = (b, a + b);
        }
        a
    }
    if k == 0 || k == n {
        return 1;
    }
    fib(k + 1) * fibonomial(n - 1, k) + fib(n - k - 1) * fibonomial(n - 1, k - 1)
}

/// Gaussian binomial by the q-Pascal rule `[n,k] = [n-1,k-1] + q^k [n-1,k]`.
pub fn gaussian_binomial(q: u128, n: usize, k: usize) -> u128 {
    if k == 0 || k == n {
        return 1;
    }
    gaussian_binomial(q, n - 1, k - 1) + q.pow(k as u32) * gaussian_binomial(q, n - 1, k)
}

/// Standard base-p digits, least significant first.
pub fn base_p_digits(mut alpha: u64, p: u64) -> Vec<u64> {
    let mut digits = Vec::new();
    while alpha > 0 {
        digits.push(alpha % p);
        alpha /= p;
    }
    digits
}

/// All sets of pairwise non-consecutive distinct Fibonacci values (1, 2, 3,
/// 5, ...) summing to `alpha`, found by scanning every subset.
pub fn zeckendorf_subsets(alpha: u64) -> Vec<Vec<u64>> {
    let mut fibs = vec![1u64, 2];
    while fibs[fibs.len() - 1] + fibs[fibs.len() - 2] <= alpha.max(2) {
        fibs.push(fibs[fibs.len() - 1] + fibs[fibs.len() - 2]);
    }
    let mut found = Vec::new();
    for mask in 0u32..(1 << fibs.len()) {
        if mask & (mask >> 1) != 0 {
            continue;
        }
        let picked: Vec<u64> = (0..fibs.len()).filter(|i| mask >> i & 1 == 1).map(|i| fibs[i]).collect();
        if picked.iter().sum::<u64>() == alpha {
            found.push(picked.into_iter().rev().collect());
        }
    }
    found
}

/// All permutations of `items` (any order).
pub fn all_permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in all_permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Every tile of a box as a set of point indices: a Cartesian product of
/// per-coordinate subsets (bitmask enumeration) whose sizes are an
/// arrangement of `part_sizes`.
pub fn brute_force_tiles(extents: &[usize], part_sizes: &[usize]) -> Vec<BTreeSet<usize>> {
    let mut tiles = BTreeSet::new();
    let idx: Vec<usize> = (0..part_sizes.len()).collect();
    for perm in all_permutations(&idx) {
        let sizes: Vec<usize> = perm.iter().map(|&i| part_sizes[i]).collect();
        let per_dim: Vec<Vec<Vec<usize>>> = sizes
            .iter()
            .zip(extents)
            .map(|(&size, &extent)| {
                (0u32..(1 << extent))
                    .filter(|m| m.count_ones() as usize == size)
                    .map(|m| (0..extent).filter(|i| m >> i & 1 == 1).collect())
                    .collect()
            })
            .collect();
        let mut partial: Vec<Vec<Vec<usize>>> = vec![vec![]];
        for options in &per_dim {
            let mut next = Vec::new();
            for prefix in &partial {
                for o in options {
                    let mut p = prefix.clone();
                    p.push(o.clone());
                    next.push(p);
                }
            }
            partial = next;
        }
        for subsets in partial {
            let mut points = vec![vec![]];
            for subset in &subsets {
                points = points
                    .into_iter()
                    .flat_map(|p: Vec<usize>| {
                        subset.iter().map(move |&c| {
                            let mut q = p.clone();
                            q.push(c);
                            q
                        })
                    })
                    .collect();
            }
            let set: BTreeSet<usize> = points
                .iter()
                .map(|p| {
                    let mut index = 0;
                    let mut stride = 1;
                    for (c, e) in p.iter().zip(extents) {
                        index += c * stride;
                        stride *= e;
                    }
                    index
                })
                .collect();
            tiles.insert(set);
        }
    }
    tiles.into_iter().collect()
}

/// Exact covers of `0..total` by the given sets: unordered selections of
/// pairwise disjoint sets (taken in increasing list order) whose union is
/// everything. Returns each cover as a sorted list of sets.
pub fn brute_force_covers(total: usize, tiles: &[BTreeSet<usize>]) -> BTreeSet<Vec<BTreeSet<usize>>> {
    fn go(
        total: usize,
        tiles: &[BTreeSet<usize>],
        start: usize,
        used: &mut BTreeSet<usize>,
        chosen: &mut Vec<usize>,
        out: &mut BTreeSet<Vec<BTreeSet<usize>>>,
    ) {
        if used.len() == total {
            let mut cover: Vec<BTreeSet<usize>> = chosen.iter().map(|&i| tiles[i].clone()).collect();
            cover.sort();
            out.insert(cover);
            return;
        }
        for i in start..tiles.len() {
            if tiles[i].is_disjoint(used) {
                used.extend(tiles[i].iter().copied());
                chosen.push(i);
                go(total, tiles, i + 1, used, chosen, out);
                chosen.pop();
                for p in &tiles[i] {
                    used.remove(p);
                }
            }
        }
    }
    let mut out = BTreeSet::new();
    go(total, tiles, 0, &mut BTreeSet::new(), &mut Vec::new(), &mut out);
    out
}

/// Counts source-to-sink paths of a layered complete-bipartite chain given
/// only its level widths, by explicit recursion over vertices.
pub fn layered_path_count(widths: &[usize]) -> u64 {
    fn walk(widths: &[usize], level: usize) -> u64 {
        if level + 1 == widths.len() {
            return 1;
        }
        (0..widths[level + 1]).map(|_| walk(widths, level + 1)).sum()
    }
    if widths.is_empty() {
        return 0;
    }
    (0..widths[0]).map(|_| walk(widths, 0)).sum()
}
