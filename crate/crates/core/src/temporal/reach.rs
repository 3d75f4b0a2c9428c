// SPDX-License-Identifier: Apache-2.0

use crate::bitset::{self, BitMatrix};
use crate::graph::{Graph, VertexId};
use crate::temporal::TemporalGraph;

/// For every vertex, the set of vertices it reaches by a temporal path.
/// A vertex is never listed in its own set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachabilityGraph {
    labels: Vec<String>,
    rows: BitMatrix,
}

impl ReachabilityGraph {
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn reaches(&self, from: VertexId, to: VertexId) -> bool {
        bitset::test(self.rows.row(from as usize), to as usize)
    }

    /// `R(v)`, ascending.
    pub fn reach_set(&self, v: VertexId) -> Vec<VertexId> {
        bitset::ones(self.rows.row(v as usize)).map(|w| w as VertexId).collect()
    }

    /// Total number of ordered reachable pairs.
    pub fn pairs(&self) -> usize {
        (0..self.rows.rows()).map(|r| bitset::count(self.rows.row(r))).sum()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

/// Temporal reachability by one sweep over the contacts in decreasing time.
///
/// Every vertex starts out reaching itself. An arc `(i, j, t)` then gives `i`
/// everything `j` reaches using arcs later than `t`. Arcs sharing a timestamp
/// are applied as one batch that reads the sets as they were before the
/// batch, so no path ever takes two hops at the same instant.
pub fn reach(tg: &TemporalGraph) -> ReachabilityGraph {
    let n = tg.n();
    let mut rows = BitMatrix::new(n, n);
    for v in 0..n {
        bitset::set(rows.row_mut(v), v);
    }

    let arcs: Vec<(VertexId, VertexId, f64)> = tg.arcs().collect();
    let words = rows.words();
    let mut snapshot: Vec<u64> = Vec::new();
    let mut snap_of: Vec<u32> = vec![u32::MAX; n];
    let mut is_source: Vec<bool> = vec![false; n];
    let mut touched: Vec<VertexId> = Vec::new();

    let mut end = arcs.len();
    while end > 0 {
        let t = arcs[end - 1].2;
        let mut start = end - 1;
        while start > 0 && arcs[start - 1].2 == t {
            start -= 1;
        }
        let batch = &arcs[start..end];
        end = start;

        if let [(i, j, _)] = batch {
            let (dst, src) = rows.row_pair(*i as usize, *j as usize);
            bitset::or_into(dst, src);
            continue;
        }

        for &(i, _, _) in batch {
            is_source[i as usize] = true;
        }
        snapshot.clear();
        touched.clear();
        for &(_, j, _) in batch {
            let j = j as usize;
            if is_source[j] && snap_of[j] == u32::MAX {
                snap_of[j] = (snapshot.len() / words) as u32;
                snapshot.extend_from_slice(rows.row(j));
                touched.push(j as VertexId);
            }
        }
        for &(i, j, _) in batch {
            let (i, j) = (i as usize, j as usize);
            match snap_of[j] {
                u32::MAX => {
                    let (dst, src) = rows.row_pair(i, j);
                    bitset::or_into(dst, src);
                }
                s => {
                    let s = s as usize * words;
                    bitset::or_into(rows.row_mut(i), &snapshot[s..s + words]);
                }
            }
        }
        for &(i, _, _) in batch {
            is_source[i as usize] = false;
        }
        for &j in &touched {
            snap_of[j as usize] = u32::MAX;
        }
    }

    for v in 0..n {
        bitset::clear(rows.row_mut(v), v);
    }
    ReachabilityGraph {
        labels: tg.labels().to_vec(),
        rows,
    }
}

/// Undirected graph with `{u, v}` whenever `u` reaches `v` and `v` reaches `u`.
pub fn strong_reachability(r: &ReachabilityGraph) -> Graph {
    let mut edges = Vec::new();
    for u in 0..r.n() {
        let row = r.rows.row(u);
        for w in bitset::ones(row) {
            if w > u && bitset::test(r.rows.row(w), u) {
                edges.push((u as VertexId, w as VertexId));
            }
        }
    }
    Graph::from_edges_with_labels(r.labels.clone(), edges)
}
