use alloc::vec::Vec;

/// Rearranges `items` into the next lexicographic permutation, returning
/// false (and leaving them sorted ascending) after the last one.
pub(crate) fn next_permutation(items: &mut [usize]) -> bool {
    let n = items.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && items[i - 1] >= items[i] {
        i -= 1;
    }
    if i == 0 {
        items.reverse();
        return false;
    }
    let mut j = n - 1;
    while items[j] <= items[i - 1] {
        j -= 1;
    }
    items.swap(i - 1, j);
    items[i..].reverse();
    true
}

/// All permutations of `1..=m` in lexicographic order.
pub(crate) fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (1..=m).collect();
    let mut all = alloc::vec![current.clone()];
    while next_permutation(&mut current) {
        all.push(current.clone());
    }
    all
}

/// True iff `sigma` is a bijection on `1..=sigma.len()`.
pub(crate) fn is_permutation(sigma: &[usize]) -> bool {
    let mut seen = alloc::vec![false; sigma.len()];
    sigma.iter().all(|&v| {
        (1..=sigma.len()).contains(&v) && !core::mem::replace(&mut seen[v - 1], true)
    })
}

/// All `size`-element subsets of `0..n` as sorted vectors, in lexicographic
/// order.
pub(crate) fn combinations(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if size > n {
        return out;
    }
    let mut current: Vec<usize> = (0..size).collect();
    loop {
        out.push(current.clone());
        let mut i = size;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] < n - size + i {
                break;
            }
        }
        current[i] += 1;
        for j in i + 1..size {
            current[j] = current[j - 1] + 1;
        }
    }
}
