// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

use crate::clique::verify_clique;
use crate::graph::{Graph, VertexId};
use crate::metrics::kcore::{core_decomposition, CoreDecomposition};
use crate::metrics::triangles::{triangle_counts, TriangleCounts};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MetricsError {
    #[error("vertex set is not a clique")]
    NotAClique,
    #[error("empty vertex set")]
    EmptySet,
}

/// Degree, core and triangle bounds on the clique number.
///
/// On a connected graph `min_degree <= omega - 1 <= degeneracy <= max_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueBounds {
    /// `delta(G)`.
    pub min_degree: usize,
    /// `K(G) + 1`.
    pub kcore_ub: usize,
    /// `Delta(G) + 1`.
    pub degree_ub: usize,
    /// `floor(sqrt(2 T(G)))`. Informational: a clique's own vertices have
    /// `T >= (w-1)(w-2)/2`, which can sit below `w`, so this value is not used
    /// for pruning.
    pub triangle_ub: u64,
    /// `min(kcore_ub, degree_ub)`, and 2 for a graph with edges but no
    /// triangles.
    pub best_ub: usize,
}

pub fn clique_bounds(g: &Graph) -> CliqueBounds {
    clique_bounds_from(g, &core_decomposition(g), &triangle_counts(g))
}

pub fn clique_bounds_from(g: &Graph, cores: &CoreDecomposition, tc: &TriangleCounts) -> CliqueBounds {
    let kcore_ub = cores.degeneracy as usize + 1;
    let degree_ub = g.max_degree() + 1;
    let mut best_ub = kcore_ub.min(degree_ub);
    if tc.max_t == 0 && g.m() > 0 {
        best_ub = best_ub.min(2);
    }
    if g.n() == 0 {
        best_ub = 0;
    }
    CliqueBounds {
        min_degree: g.min_degree(),
        kcore_ub,
        degree_ub,
        triangle_ub: floor_sqrt(2 * tc.max_t),
        best_ub,
    }
}

/// Exact integer square root.
pub(crate) fn floor_sqrt(x: u64) -> u64 {
    let mut r = (x as f64).sqrt() as u64;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

/// Fraction of `clique` lying in the maximum core.
pub fn kcore_recall(g: &Graph, clique: &[VertexId]) -> Result<f64, MetricsError> {
    kcore_recall_with(g, &core_decomposition(g), clique)
}

pub fn kcore_recall_with(g: &Graph, cores: &CoreDecomposition, clique: &[VertexId]) -> Result<f64, MetricsError> {
    if clique.is_empty() {
        return Err(MetricsError::EmptySet);
    }
    if !verify_clique(g, clique) {
        return Err(MetricsError::NotAClique);
    }
    let inside = clique
        .iter()
        .filter(|&&v| cores.core_number[v as usize] == cores.degeneracy)
        .count();
    Ok(inside as f64 / clique.len() as f64)
}
