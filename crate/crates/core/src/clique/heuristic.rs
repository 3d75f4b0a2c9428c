// SPDX-License-Identifier: Apache-2.0

use std::time::Instant;

use crate::clique::{CliqueResult, SharedBest, Status};
use crate::graph::{Graph, VertexId};
use crate::workers::{default_threads, scoped_workers, ChunkCursor};

/// Greedy clique using all available cores. See [`max_clique_heuristic_with`].
pub fn max_clique_heuristic(g: &Graph) -> CliqueResult {
    max_clique_heuristic_with(g, default_threads())
}

/// Greedy clique.
///
/// From every start vertex the clique grows one vertex at a time, always
/// taking the remaining common neighbor of largest degree (ties to the lower
/// id). The largest clique over all starts is returned. Starts and
/// candidates whose degree cannot beat the best clique so far are skipped,
/// which never changes the size of the result, only which witness is kept.
pub fn max_clique_heuristic_with(g: &Graph, threads: usize) -> CliqueResult {
    let started = Instant::now();
    let clique = greedy_clique(g, threads);
    let elapsed = started.elapsed();
    CliqueResult {
        size: clique.len(),
        heuristic_size: clique.len(),
        improvements: vec![clique.len()],
        vertices: clique,
        status: Status::Heuristic,
        steps: g.n() as u64,
        wall_time: elapsed,
        heuristic_time: elapsed,
    }
}

/// Best greedy clique, sorted ascending. Empty only for the empty graph.
pub(crate) fn greedy_clique(g: &Graph, threads: usize) -> Vec<VertexId> {
    let mut starts: Vec<VertexId> = g.vertices().collect();
    starts.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let best = SharedBest::new(0);
    let cursor = ChunkCursor::new(starts.len(), 64);
    scoped_workers(threads.max(1), || {
        let mut grower = Grower::default();
        while let Some(range) = cursor.next_range() {
            for &v in &starts[range] {
                let floor = best.size();
                if g.degree(v) < floor {
                    // starts are by descending degree
                    return;
                }
                if grower.grow(g, v, floor) {
                    best.offer(&grower.clique);
                }
            }
        }
    });
    let (_, mut clique) = best.snapshot();
    clique.sort_unstable();
    clique
}

#[derive(Default)]
struct Grower {
    clique: Vec<VertexId>,
    cand: Vec<VertexId>,
    scratch: Vec<VertexId>,
}

impl Grower {
    /// Greedy clique from `v`; true if it ends up larger than `floor`.
    fn grow(&mut self, g: &Graph, v: VertexId, floor: usize) -> bool {
        self.clique.clear();
        self.clique.push(v);
        self.cand.clear();
        self.cand
            .extend(g.neighbors(v).iter().copied().filter(|&w| g.degree(w) >= floor));
        loop {
            if self.clique.len() + self.cand.len() <= floor {
                return false;
            }
            let Some(&u) = self.cand.iter().max_by_key(|&&w| (g.degree(w), std::cmp::Reverse(w))) else {
                break;
            };
            self.clique.push(u);
            intersect_sorted(&self.cand, g.neighbors(u), &mut self.scratch);
            std::mem::swap(&mut self.cand, &mut self.scratch);
        }
        self.clique.len() > floor
    }
}

/// `out = a ∩ b` for ascending slices.
pub(crate) fn intersect_sorted(a: &[VertexId], b: &[VertexId], out: &mut Vec<VertexId>) {
    out.clear();
    if a.len() * 16 < b.len() {
        out.extend(a.iter().copied().filter(|x| b.binary_search(x).is_ok()));
        return;
    }
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
}
