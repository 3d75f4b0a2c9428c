// SPDX-License-Identifier: Apache-2.0

//! Triangle counts, clustering, k-cores and clique-number bounds.

mod bounds;
mod kcore;
mod stats;
mod triangles;

pub use bounds::{clique_bounds, clique_bounds_from, kcore_recall, kcore_recall_with, CliqueBounds, MetricsError};
pub use kcore::{core_decomposition, CoreDecomposition};
pub use stats::{stats, stats_with, GraphStats, STATS_CSV_HEADER};
pub use triangles::{clustering, clustering_from_counts, triangle_counts, TriangleCounts};
