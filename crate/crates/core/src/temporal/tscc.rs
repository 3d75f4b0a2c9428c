// SPDX-License-Identifier: Apache-2.0

use std::time::{Duration, Instant};

use crate::clique::{CliqueResult, SearchBounds, Status};
use crate::graph::{Graph, VertexId};
use crate::metrics::{stats_with, GraphStats};
use crate::temporal::{reach, strong_reachability, TemporalGraph};

/// Largest temporal strongly connected component found.
#[derive(Debug, Clone)]
pub struct TsccResult {
    /// Members, ascending by id.
    pub vertices: Vec<VertexId>,
    pub size: usize,
    /// True when `size` is proven maximum.
    pub exact: bool,
    pub status: Status,
    /// Ordered pairs `(u, v)` with `u` reaching `v`.
    pub reach_pairs: usize,
    /// The strong reachability graph.
    pub strong: Graph,
    /// Statistics of `strong`, including clique size and core recall.
    pub strong_stats: GraphStats,
    pub clique: CliqueResult,
    pub reach_time: Duration,
}

/// Builds the strong reachability graph and takes its maximum clique.
///
/// When the time limit cuts the search short the best clique seen so far is
/// returned, which is never smaller than the greedy one.
pub fn max_tscc(tg: &TemporalGraph, bounds: &SearchBounds, threads: usize) -> TsccResult {
    let started = Instant::now();
    let r = reach(tg);
    let strong = strong_reachability(&r);
    let reach_time = started.elapsed();
    let (strong_stats, clique) = stats_with(&strong, Some((bounds, threads)));
    let clique = clique.expect("clique search requested");
    TsccResult {
        vertices: clique.vertices.clone(),
        size: clique.size,
        exact: clique.exact(),
        status: clique.status,
        reach_pairs: r.pairs(),
        strong,
        strong_stats,
        clique,
        reach_time,
    }
}
