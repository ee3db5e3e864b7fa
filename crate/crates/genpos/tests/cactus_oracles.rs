//! Cut-path distances and cycle flags validated against the covering-arc
//! oracle, plus the tree closed form against the subset scan.

mod common;

use genpos::cactus::{cactus_profile, cut_path_distance, tree_gp};
use genpos::families::gen_random_tree;
use genpos::Graph;
use itertools::Itertools;

/// A single cycle of length `len` with a pendant leaf on each position
/// in `cuts`, making exactly those positions cut vertices.
fn cycle_with_cuts(len: usize, cuts: &[usize]) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..len).map(|i| (i, (i + 1) % len)).collect();
    for (extra, &c) in cuts.iter().enumerate() {
        edges.push((c, len + extra));
    }
    Graph::from_edges(len + cuts.len(), &edges).unwrap()
}

#[test]
fn cut_path_distance_matches_arc_oracle() {
    for len in 3..=10usize {
        for take in 2..=4.min(len) {
            for cuts in (0..len).combinations(take) {
                let g = cycle_with_cuts(len, &cuts);
                let profile = cactus_profile(&g).unwrap();
                let rec = profile
                    .cycles
                    .iter()
                    .find(|c| c.length == len)
                    .expect("the cycle block");
                let expected = common::dc_by_arc_scan(len, &cuts);
                assert_eq!(
                    rec.d_c_min, expected,
                    "len={len} cuts={cuts:?}"
                );
                assert_eq!(
                    cut_path_distance(rec).ok(),
                    expected,
                    "len={len} cuts={cuts:?}"
                );
                // The gaps always partition the cycle.
                assert_eq!(rec.gaps.iter().sum::<usize>(), len);
            }
        }
    }
}

#[test]
fn flags_follow_the_thresholds() {
    for len in 3..=10usize {
        for take in 2..=3.min(len) {
            for cuts in (0..len).combinations(take) {
                let g = cycle_with_cuts(len, &cuts);
                let profile = cactus_profile(&g).unwrap();
                let rec = profile
                    .cycles
                    .iter()
                    .find(|c| c.length == len)
                    .expect("the cycle block");
                let dc = common::dc_by_arc_scan(len, &cuts).unwrap();
                let (good, bad) = if len % 2 == 0 {
                    (dc <= len / 2, dc >= len / 2 - 1)
                } else {
                    (dc < len / 2, dc >= len / 2)
                };
                assert_eq!(rec.is_good, good, "len={len} cuts={cuts:?} dc={dc}");
                assert_eq!(rec.is_bad, bad, "len={len} cuts={cuts:?} dc={dc}");
                assert!(!rec.is_end_block, "len={len} cuts={cuts:?}");
            }
        }
    }
}

#[test]
fn single_cut_cycles_are_end_blocks_and_good() {
    for len in 3..=8usize {
        for cut in 0..len {
            let g = cycle_with_cuts(len, &[cut]);
            let profile = cactus_profile(&g).unwrap();
            let rec = profile
                .cycles
                .iter()
                .find(|c| c.length == len)
                .expect("the cycle block");
            assert!(rec.is_end_block && rec.is_good && !rec.is_bad);
            assert_eq!(rec.d_c_min, None);
        }
    }
}

#[test]
fn tree_closed_form_matches_subset_scan() {
    use rand::Rng;
    let mut rng = common::seeded_rng(23);
    for i in 0..40 {
        let n = rng.gen_range(2..=10usize);
        let seed: u64 = rng.gen();
        let t = gen_random_tree(n, seed).unwrap();
        let (value, sets) = common::gp_by_subset_scan(&t);
        let cert = tree_gp(&t).unwrap();
        assert_eq!(cert.value, value, "tree {i}: n={n} seed={seed}");
        // The leaf set is among the maximum sets the scan found.
        assert!(
            sets.contains(&cert.witness.as_vec()),
            "tree {i}: n={n} seed={seed}"
        );
    }
}
