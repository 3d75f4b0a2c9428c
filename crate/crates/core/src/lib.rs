// SPDX-License-Identifier: Apache-2.0

//! Maximum cliques in large sparse graphs, the degree/core/triangle bounds
//! around them, and largest temporal strong components of contact networks.
//!
//! ```
//! use maxclique::{build_graph, max_clique_exact, parse_edge_list_str, SearchBounds};
//!
//! let edges = parse_edge_list_str("a b\nb c\na c\nc d\n", false).unwrap();
//! let g = build_graph(&edges, false);
//! let r = max_clique_exact(&g, &SearchBounds::default(), 1);
//! assert_eq!(r.size, 3);
//! ```

mod bitset;
pub mod clique;
pub mod generators;
pub mod graph;
pub mod metrics;
pub mod parse;
pub mod temporal;
mod workers;

pub use clique::{
    max_clique_exact, max_clique_heuristic, max_clique_heuristic_with, verify_clique, CliqueError, CliqueResult,
    SearchBounds, SharedBest, Status,
};
pub use graph::{build_graph, Graph, GraphError, VertexId};
pub use metrics::{
    clique_bounds, clustering, core_decomposition, kcore_recall, stats, triangle_counts, CliqueBounds,
    CoreDecomposition, GraphStats, TriangleCounts,
};
pub use parse::{parse_edge_list, parse_edge_list_str, Dialect, EdgeList, ParseError};
pub use temporal::{
    max_tscc, parse_temporal_edge_list, parse_temporal_edge_list_with, reach, strong_reachability, ReachabilityGraph,
    TemporalColumns, TemporalEdge, TemporalGraph, TsccResult,
};
