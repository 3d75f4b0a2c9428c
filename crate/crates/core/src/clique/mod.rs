// SPDX-License-Identifier: Apache-2.0

//! Maximum clique search.
//!
//! [`max_clique_exact`] is a per-vertex branch and bound: every vertex `v`
//! seeds a depth-first search over its neighbors peeled after it in a
//! degeneracy ordering, and subtrees that cannot beat the incumbent are cut.
//! The incumbent is seeded from [`max_clique_heuristic`] and from the
//! caller's lower bound; the search stops early once it holds a clique of the
//! caller's upper bound or of the degeneracy bound `K(G) + 1`.

mod exact;
mod heuristic;
mod shared;

use std::time::Duration;

use thiserror::Error;

use crate::graph::{Graph, VertexId};

pub use exact::max_clique_exact;
pub use heuristic::{max_clique_heuristic, max_clique_heuristic_with};
pub use shared::SharedBest;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CliqueError {
    #[error("lower bound {lb} exceeds upper bound {ub}")]
    InvertedBounds { lb: usize, ub: usize },
    #[error("upper bound must be at least 1")]
    ZeroUpperBound,
}

/// Lower/upper bounds and an optional wall-clock budget for the exact search.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchBounds {
    lb: usize,
    ub: Option<usize>,
    time_limit: Option<Duration>,
}

impl SearchBounds {
    /// `lb` seeds the incumbent size: only cliques strictly larger than `lb`
    /// are searched for. The search stops as soon as it holds a clique of
    /// size `ub`.
    pub fn new(lb: usize, ub: Option<usize>) -> Result<Self, CliqueError> {
        match ub {
            Some(0) => Err(CliqueError::ZeroUpperBound),
            Some(ub) if lb > ub => Err(CliqueError::InvertedBounds { lb, ub }),
            _ => Ok(SearchBounds {
                lb,
                ub,
                time_limit: None,
            }),
        }
    }

    pub fn with_time_limit(mut self, limit: Option<Duration>) -> Self {
        self.time_limit = limit;
        self
    }

    pub fn lb(&self) -> usize {
        self.lb
    }

    pub fn ub(&self) -> Option<usize> {
        self.ub
    }

    pub fn time_limit(&self) -> Option<Duration> {
        self.time_limit
    }
}

/// How a search ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// The witness is a maximum clique.
    Optimal,
    /// A clique of exactly the requested upper bound was found; larger ones
    /// may exist.
    UpperBoundReached,
    /// The search finished without finding a clique larger than the lower
    /// bound. `size` reports the lower bound and the witness is empty.
    NoneAboveLowerBound,
    /// The time limit expired; the witness is the best clique seen.
    TimeLimit,
    /// Greedy result with no optimality claim.
    Heuristic,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Optimal => "optimal",
            Status::UpperBoundReached => "ub-reached",
            Status::NoneAboveLowerBound => "none-above-lb",
            Status::TimeLimit => "time-limit",
            Status::Heuristic => "heuristic",
        }
    }
}

/// Outcome of a clique search.
///
/// `size == vertices.len()` except for [`Status::NoneAboveLowerBound`],
/// where the witness is empty and `size` is the lower bound.
#[derive(Debug, Clone, PartialEq)]
pub struct CliqueResult {
    /// Witness, ascending.
    pub vertices: Vec<VertexId>,
    pub size: usize,
    pub status: Status,
    /// Search-tree nodes expanded.
    pub steps: u64,
    /// Total time, including the heuristic warm start.
    pub wall_time: Duration,
    /// Size found by the heuristic warm start (or by the heuristic itself).
    pub heuristic_size: usize,
    pub heuristic_time: Duration,
    /// Every incumbent size published during the search, in order.
    pub improvements: Vec<usize>,
}

impl CliqueResult {
    /// True unless the time limit cut the search short (or the result is
    /// heuristic).
    pub fn exact(&self) -> bool {
        !matches!(self.status, Status::TimeLimit | Status::Heuristic)
    }

    /// True when the result may be smaller than the clique number because
    /// of the upper bound or the time limit.
    pub fn truncated(&self) -> bool {
        matches!(self.status, Status::UpperBoundReached | Status::TimeLimit)
    }
}

/// True iff `vertices` are distinct, in range, and pairwise adjacent.
pub fn verify_clique(g: &Graph, vertices: &[VertexId]) -> bool {
    if vertices.iter().any(|&v| v as usize >= g.n()) {
        return false;
    }
    for (i, &u) in vertices.iter().enumerate() {
        for &w in &vertices[i + 1..] {
            if u == w || !g.has_edge(u, w) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_validation() {
        assert!(SearchBounds::new(3, Some(5)).is_ok());
        assert!(SearchBounds::new(5, Some(5)).is_ok());
        assert!(SearchBounds::new(7, None).is_ok());
        assert_eq!(
            SearchBounds::new(6, Some(5)),
            Err(CliqueError::InvertedBounds { lb: 6, ub: 5 })
        );
        assert_eq!(SearchBounds::new(0, Some(0)), Err(CliqueError::ZeroUpperBound));
    }

    #[test]
    fn verify() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        assert!(verify_clique(&g, &[3]));
        assert!(verify_clique(&g, &[]));
        assert!(verify_clique(&g, &[0, 1, 2]));
        assert!(!verify_clique(&g, &[0, 3]));
        assert!(!verify_clique(&g, &[0, 0]));
        assert!(!verify_clique(&g, &[0, 9]));
    }
}
