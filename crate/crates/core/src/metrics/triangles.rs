// SPDX-License-Identifier: Apache-2.0

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::graph::{Graph, VertexId};

/// Per-vertex triangle participation.
#[derive(Debug, Clone, PartialEq)]
pub struct TriangleCounts {
    /// `t(v)`: edges among the neighbors of `v`.
    pub per_vertex: Vec<u64>,
    /// Distinct triangles, `sum t(v) / 3`.
    pub total_triangles: u64,
    /// `T(G) = max t(v)`.
    pub max_t: u64,
    /// `sum t(v) / n`.
    pub avg_t: f64,
}

/// Exact triangle counts.
///
/// Edges are oriented from lower to higher (degree, id) rank so each
/// triangle is found exactly once, by intersecting the sorted out-lists of
/// its two lowest-ranked corners. Work is spread over the current rayon pool.
pub fn triangle_counts(g: &Graph) -> TriangleCounts {
    let n = g.n();
    let higher = |u: VertexId, w: VertexId| (g.degree(u), u) < (g.degree(w), w);

    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0usize);
    let mut out: Vec<VertexId> = Vec::with_capacity(g.m());
    for u in g.vertices() {
        out.extend(g.neighbors(u).iter().copied().filter(|&w| higher(u, w)));
        offsets.push(out.len());
    }
    let out_of = |u: VertexId| &out[offsets[u as usize]..offsets[u as usize + 1]];

    let counts: Vec<AtomicU64> = (0..n).map(|_| AtomicU64::new(0)).collect();
    (0..n as VertexId).into_par_iter().for_each(|u| {
        let ou = out_of(u);
        let mut local = 0u64;
        for &v in ou {
            let ov = out_of(v);
            let (mut i, mut j) = (0, 0);
            while i < ou.len() && j < ov.len() {
                match ou[i].cmp(&ov[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        let w = ou[i];
                        local += 1;
                        counts[v as usize].fetch_add(1, Ordering::Relaxed);
                        counts[w as usize].fetch_add(1, Ordering::Relaxed);
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
        if local > 0 {
            counts[u as usize].fetch_add(local, Ordering::Relaxed);
        }
    });

    let per_vertex: Vec<u64> = counts.into_iter().map(AtomicU64::into_inner).collect();
    let sum: u64 = per_vertex.iter().sum();
    TriangleCounts {
        total_triangles: sum / 3,
        max_t: per_vertex.iter().copied().max().unwrap_or(0),
        avg_t: if n == 0 { 0.0 } else { sum as f64 / n as f64 },
        per_vertex,
    }
}

/// Mean local clustering coefficient and global transitivity.
///
/// Vertices of degree below two contribute a local coefficient of zero to
/// the mean.
pub fn clustering(g: &Graph) -> (f64, f64) {
    clustering_from_counts(g, &triangle_counts(g))
}

pub fn clustering_from_counts(g: &Graph, tc: &TriangleCounts) -> (f64, f64) {
    let n = g.n();
    if n == 0 {
        return (0.0, 0.0);
    }
    let mut local_sum = 0.0;
    let mut wedges = 0u64;
    for v in g.vertices() {
        let d = g.degree(v) as u64;
        let pairs = d * d.saturating_sub(1) / 2;
        wedges += pairs;
        if pairs > 0 {
            local_sum += tc.per_vertex[v as usize] as f64 / pairs as f64;
        }
    }
    let global = if wedges == 0 {
        0.0
    } else {
        3.0 * tc.total_triangles as f64 / wedges as f64
    };
    (local_sum / n as f64, global)
}
