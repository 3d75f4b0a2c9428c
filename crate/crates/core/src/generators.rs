// SPDX-License-Identifier: Apache-2.0

//! Seeded random graphs for tests and benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexId};
use crate::temporal::TemporalGraph;

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n as VertexId {
        for v in u + 1..n as VertexId {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// `G(n, p)` with a clique planted on `k` random vertices.
pub fn planted_clique(n: usize, p: f64, k: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let members = rand::seq::index::sample(&mut rng, n, k.min(n)).into_vec();
    let mut edges = gnp(n, p, seed.wrapping_add(1)).edges().collect::<Vec<_>>();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            edges.push((u as VertexId, v as VertexId));
        }
    }
    Graph::from_edges(n, &edges)
}

/// `contacts` uniform random contacts among `n` vertices with integer times
/// in `0..time_span`. Small spans produce many simultaneous contacts.
pub fn random_temporal(n: usize, contacts: usize, time_span: u32, directed: bool, seed: u64) -> TemporalGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = Vec::with_capacity(contacts);
    if n >= 2 {
        for _ in 0..contacts {
            let u = rng.gen_range(0..n as VertexId);
            let mut v = rng.gen_range(0..n as VertexId - 1);
            if v >= u {
                v += 1;
            }
            c.push((u, v, rng.gen_range(0..time_span.max(1)) as f64));
        }
    }
    TemporalGraph::from_contacts(n, &c, directed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gnp_extremes() {
        assert_eq!(gnp(10, 0.0, 1).m(), 0);
        assert_eq!(gnp(10, 1.0, 1).m(), 45);
        assert_eq!(gnp(30, 0.5, 7), gnp(30, 0.5, 7));
    }

    #[test]
    fn planted_is_present() {
        let g = planted_clique(40, 0.1, 8, 3);
        let r = crate::clique::max_clique_exact(&g, &Default::default(), 1);
        assert!(r.size >= 8);
    }

    #[test]
    fn temporal_shape() {
        let tg = random_temporal(6, 50, 4, true, 9);
        assert_eq!(tg.edges().len(), 50);
        assert!(tg.edges().iter().all(|e| e.time < 4.0 && e.source != e.target));
    }
}
