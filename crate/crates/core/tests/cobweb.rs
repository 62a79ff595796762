mod common;

use std::sync::Arc;

use cobweb_core::cobweb::{build_hasse, permuted_subposet, poset_leq, HyperBox, SubBox, Vertex};
use cobweb_core::{BigUint, FSequence};
use common::{all_permutations, builtins, layered_path_count, term_oracle};

#[test]
fn max_chain_counts_agree_three_ways() {
    for spec in ["natural", "fibonacci"] {
        let seq = Arc::new(spec.parse::<FSequence>().unwrap());
        for n in 1..=6 {
            let b = HyperBox::new(seq.clone(), 1, n).unwrap();
            let count = b.count_max_chains();
            assert_eq!(count, seq.f_factorial(n).unwrap());
            let g = build_hasse(&seq, n).unwrap();
            assert_eq!(BigUint::from(g.count_paths(1, n)), count, "{spec} n={n}");
            let widths: Vec<usize> = (1..=n).map(|s| term_oracle(spec, s) as usize).collect();
            assert_eq!(BigUint::from(layered_path_count(&widths)), count);
            assert_eq!(BigUint::from(b.max_chains().unwrap().count()), count);
        }
    }
}

#[test]
fn general_layers_count_like_boxes() {
    let seq = Arc::new(FSequence::natural());
    let g = build_hasse(&seq, 5).unwrap();
    for k in 1..=5 {
        for n in k..=5 {
            let b = HyperBox::new(seq.clone(), k, n).unwrap();
            assert_eq!(BigUint::from(g.count_paths(k, n)), b.count_max_chains());
        }
    }
}

#[test]
fn arc_count_formula() {
    for (spec, seq) in builtins() {
        for n in 0..=6 {
            let g = build_hasse(&seq, n).unwrap();
            let expected: u128 = (0..n).map(|s| term_oracle(spec, s) * term_oracle(spec, s + 1)).sum();
            assert_eq!(g.arcs().len() as u128, expected, "{spec} n={n}");
            let sizes: Vec<u128> = (0..=n).map(|s| term_oracle(spec, s)).collect();
            assert_eq!(g.level_sizes().iter().map(|&w| w as u128).collect::<Vec<_>>(), sizes);
            for (a, b) in g.arcs() {
                assert_eq!(a.level + 1, b.level);
            }
        }
    }
}

#[test]
fn permuted_subposet_widths() {
    let seq = FSequence::fibonacci();
    for sigma in all_permutations(&[1, 2, 3, 4, 5]) {
        let g = permuted_subposet(&seq, 5, &sigma).unwrap();
        let widths: Vec<usize> = sigma.iter().map(|&s| term_oracle("fibonacci", s) as usize).collect();
        assert_eq!(g.level_sizes(), widths);
        assert_eq!(g.vertex_count(), 1 + 1 + 2 + 3 + 5);
        // Maximal chains of a permuted layer are as many as of the original.
        assert_eq!(g.count_paths(0, 4), 30);
    }
}

#[test]
fn poset_order_properties() {
    let seq = FSequence::natural();
    let g = build_hasse(&seq, 4).unwrap();
    let all: Vec<Vertex> = g.levels().iter().flatten().copied().collect();
    for &x in &all {
        assert!(poset_leq(x, x));
        for &y in &all {
            if x.level != y.level {
                assert!(poset_leq(x, y) || poset_leq(y, x));
            }
            if poset_leq(x, y) && poset_leq(y, x) {
                assert_eq!(x, y);
            }
            for &z in &all {
                if poset_leq(x, y) && poset_leq(y, z) {
                    assert!(poset_leq(x, z));
                }
            }
        }
    }
    // Arcs are exactly the covering pairs.
    for &(a, b) in g.arcs() {
        assert!(poset_leq(a, b) && a != b);
    }
}

fn lattice_laws(b: &HyperBox) {
    let points: Vec<Vec<usize>> = b.max_chains().unwrap().collect();
    for x in &points {
        assert_eq!(&b.join(x, x).unwrap(), x);
        assert_eq!(&b.meet(x, x).unwrap(), x);
        for y in &points {
            let j = b.join(x, y).unwrap();
            let m = b.meet(x, y).unwrap();
            assert_eq!(j, b.join(y, x).unwrap());
            assert_eq!(m, b.meet(y, x).unwrap());
            assert_eq!(&b.join(x, &b.meet(x, y).unwrap()).unwrap(), x);
            assert_eq!(&b.meet(x, &b.join(x, y).unwrap()).unwrap(), x);
            assert_eq!(b.product_leq(x, y).unwrap(), &m == x);
            assert!(b.product_leq(x, &j).unwrap());
            let strip = b.strip(x, y).unwrap();
            assert!(strip.contains_point(x) && strip.contains_point(y));
            for z in &points {
                assert_eq!(
                    b.join(&j, z).unwrap(),
                    b.join(x, &b.join(y, z).unwrap()).unwrap()
                );
                assert_eq!(
                    b.meet(&m, z).unwrap(),
                    b.meet(x, &b.meet(y, z).unwrap()).unwrap()
                );
            }
        }
    }
}

#[test]
fn lattice_laws_small_boxes() {
    let nat = Arc::new(FSequence::natural());
    let fib = Arc::new(FSequence::fibonacci());
    lattice_laws(&HyperBox::new(nat.clone(), 3, 4).unwrap());
    lattice_laws(&HyperBox::new(fib.clone(), 1, 5).unwrap());
    lattice_laws(&HyperBox::new(nat, 1, 4).unwrap());
    lattice_laws(&HyperBox::new(fib, 3, 5).unwrap());
}

fn sub_boxes(b: &HyperBox) -> Vec<SubBox> {
    let mut all: Vec<Vec<(usize, usize)>> = vec![vec![]];
    for &e in &b.extents_usize().unwrap() {
        let intervals: Vec<(usize, usize)> =
            (0..e).flat_map(|lo| (lo..e).map(move |hi| (lo, hi))).collect();
        all = all
            .into_iter()
            .flat_map(|p| {
                intervals.iter().map(move |&iv| {
                    let mut q = p.clone();
                    q.push(iv);
                    q
                })
            })
            .collect();
    }
    all.into_iter().map(|iv| SubBox::new(b.clone(), iv).unwrap()).collect()
}

#[test]
fn inclusion_is_a_partial_order() {
    let nat = Arc::new(FSequence::natural());
    // Up to three dimensions with extents at most three.
    for (k, n) in [(1, 3), (2, 3), (3, 3), (1, 1)] {
        let b = HyperBox::new(nat.clone(), k, n).unwrap();
        let subs = sub_boxes(&b);
        for x in &subs {
            assert!(x.contains(x).unwrap());
            for y in &subs {
                let xy = x.contains(y).unwrap();
                // Inclusion as boxes agrees with inclusion as point sets.
                let pointwise = b
                    .max_chains()
                    .unwrap()
                    .all(|p| !y.contains_point(&p) || x.contains_point(&p));
                assert_eq!(xy, pointwise);
                if xy && y.contains(x).unwrap() {
                    assert_eq!(x, y);
                }
                if xy {
                    for z in &subs {
                        if y.contains(z).unwrap() {
                            assert!(x.contains(z).unwrap());
                        }
                    }
                }
            }
        }
    }
}
