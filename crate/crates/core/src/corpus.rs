//! Seeded random graphs for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::graph::Graph;

/// `G(n, p)`: each pair is an edge independently with probability `p`.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// A uniformly relabelled random recursive tree on `n` vertices.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let edges: Vec<_> = (1..n)
        .map(|i| (perm[rng.gen_range(0..i)], perm[i]))
        .collect();
    Graph::from_edges(n, &edges)
}

/// `count` graphs with between 1 and `max_n` vertices and random density.
pub fn random_graphs(count: usize, max_n: usize, seed: u64) -> Result<Vec<Graph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let p = rng.gen_range(0.0..=1.0);
            erdos_renyi(n, p, rng.gen())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_and_valid() {
        assert_eq!(
            erdos_renyi(12, 0.4, 3).unwrap(),
            erdos_renyi(12, 0.4, 3).unwrap()
        );
        for seed in 0..20 {
            let t = random_tree(9, seed).unwrap();
            assert!(t.validate());
            assert_eq!(t.edge_count(), 8);
            assert!(t.is_bipartite());
        }
        let gs = random_graphs(50, 10, 1).unwrap();
        assert!(gs
            .iter()
            .all(|g| g.validate() && (1..=10).contains(&g.vertex_count())));
        assert_eq!(erdos_renyi(6, 1.0, 0).unwrap().edge_count(), 15);
        assert_eq!(erdos_renyi(6, 0.0, 0).unwrap().edge_count(), 0);
    }
}
