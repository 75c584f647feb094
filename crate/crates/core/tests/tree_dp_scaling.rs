use std::time::{Duration, Instant};

use mcs_core::random::{random_tree, SplitMix64};
use mcs_core::{is_consistent, solve_tree_mcs};

fn run(n: usize, c: usize, seed: u64) {
    let g = random_tree(n, c, &mut SplitMix64::new(seed));
    let start = Instant::now();
    let sol = solve_tree_mcs(&g).unwrap();
    let took = start.elapsed();
    assert!(is_consistent(&g, sol.certificate.witness()).unwrap());
    let bound = (n as u128).pow(3) << (3 * c);
    assert!(sol.stats.max_entries_per_prefix as u128 <= bound, "per-prefix entries exceed n^3 2^(3c)");
    let total_bound = ((2 * n as u128 - 1) * (n as u128 + 1).pow(3)) << (3 * c);
    assert!((sol.stats.memo_entries as u128) <= total_bound);
    assert!(took < Duration::from_secs(60), "n={n} c={c} took {took:?}");
    eprintln!("n={n} c={c} size={} memo={} in {took:?}", sol.certificate.size(), sol.stats.memo_entries);
}

#[test]
fn hundred_vertices_two_colors() {
    run(100, 2, 11);
}

#[test]
fn fifty_vertices_three_colors() {
    run(50, 3, 12);
}
