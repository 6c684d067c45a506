//! Seeded random test graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

const RESAMPLE_ATTEMPTS: usize = 64;

/// Erdős–Rényi `G(n, p)` conditioned on connectivity. Resamples up to a
/// fixed number of times, then plants a random spanning tree and adds
/// `G(n, p)` edges on top. Deterministic for a given `(n, p, seed)`.
pub fn random_connected_graph(n: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid("random graphs need at least one vertex"));
    }
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(Error::invalid(format!("edge probability {edge_prob} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    for _ in 0..RESAMPLE_ATTEMPTS {
        let g = Graph::from_valid_edges(n, gnp_edges(&mut rng, n, edge_prob));
        if g.is_connected() {
            return Ok(g);
        }
    }

    // Random recursive tree over a shuffled vertex order.
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.random_range(0..=i));
    }
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (order[rng.random_range(0..i)], order[i])).collect();
    edges.extend(gnp_edges(&mut rng, n, edge_prob));
    Ok(Graph::from_valid_edges(n, edges))
}

fn gnp_edges(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_and_complete() {
        let g = random_connected_graph(1, 0.3, 9).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
        assert_eq!(random_connected_graph(7, 1.0, 3).unwrap(), Graph::complete(7));
    }

    #[test]
    fn deterministic_and_connected() {
        for seed in 0..40 {
            let a = random_connected_graph(12, 0.15, seed).unwrap();
            let b = random_connected_graph(12, 0.15, seed).unwrap();
            assert_eq!(a, b);
            assert!(a.is_connected());
        }
        // p = 0 can only succeed through the spanning-tree fallback
        let tree = random_connected_graph(9, 0.0, 5).unwrap();
        assert!(tree.is_connected());
        assert_eq!(tree.edge_count(), 8);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(random_connected_graph(0, 0.5, 1).is_err());
        assert!(random_connected_graph(3, 1.5, 1).is_err());
    }
}
