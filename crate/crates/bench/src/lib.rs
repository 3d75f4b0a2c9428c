// SPDX-License-Identifier: Apache-2.0

//! Fixed inputs shared by the benchmarks.

use maxclique::generators::{gnp, planted_clique, random_temporal};
use maxclique::{Graph, TemporalGraph};

/// Sparse graph with a hidden clique, the usual shape of real networks.
pub fn sparse_planted() -> Graph {
    planted_clique(5_000, 0.002, 24, 11)
}

/// Small dense graph where branch-and-bound does real work.
pub fn dense() -> Graph {
    gnp(120, 0.7, 5)
}

/// Contact sequence with many repeated timestamps.
pub fn contacts() -> TemporalGraph {
    random_temporal(400, 20_000, 500, false, 3)
}
