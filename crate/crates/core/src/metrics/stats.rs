// SPDX-License-Identifier: Apache-2.0

use std::fmt::Write as _;

use crate::clique::{max_clique_exact, CliqueResult, SearchBounds};
use crate::graph::Graph;
use crate::metrics::bounds::kcore_recall_with;
use crate::metrics::kcore::core_decomposition;
use crate::metrics::triangles::{clustering_from_counts, triangle_counts};

/// One row of network statistics.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub d_max: usize,
    /// `2m / n`.
    pub d_avg: f64,
    /// Mean of the local clustering coefficients.
    pub mean_cc: f64,
    /// Triangles over wedges.
    pub global_cc: f64,
    /// Largest number of triangles on one vertex.
    pub max_triangles: u64,
    pub avg_triangles: f64,
    /// `sqrt(2 T)` as a real number.
    pub sqrt_2t: f64,
    /// Degeneracy `K(G)`.
    pub degeneracy: u32,
    pub omega: Option<usize>,
    pub gamma_k: Option<f64>,
}

pub const STATS_CSV_HEADER: &str = "graph,|V|,|E|,d_max,d_avg,cc_mean,T,T_avg,sqrt2T,K,omega,gamma_K";

impl GraphStats {
    /// CSV row in [`STATS_CSV_HEADER`] column order.
    pub fn csv_row(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = write!(
            s,
            "{},{},{},{},{:.4},{:.4},{},{:.4},{:.4},{},",
            name,
            self.n,
            self.m,
            self.d_max,
            self.d_avg,
            self.mean_cc,
            self.max_triangles,
            self.avg_triangles,
            self.sqrt_2t,
            self.degeneracy
        );
        if let Some(w) = self.omega {
            let _ = write!(s, "{w}");
        }
        s.push(',');
        if let Some(g) = self.gamma_k {
            let _ = write!(s, "{g:.4}");
        }
        s
    }
}

/// Statistics row; runs the exact clique solver when `with_clique` is set.
pub fn stats(g: &Graph, with_clique: bool) -> GraphStats {
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    let bounds = SearchBounds::default();
    stats_with(g, with_clique.then_some((&bounds, threads))).0
}

/// Like [`stats`], but with explicit solver settings, and also returning the
/// solver result so callers can report the witness.
pub fn stats_with(g: &Graph, clique: Option<(&SearchBounds, usize)>) -> (GraphStats, Option<CliqueResult>) {
    let n = g.n();
    let tc = triangle_counts(g);
    let (mean_cc, global_cc) = clustering_from_counts(g, &tc);
    let cores = core_decomposition(g);

    let result = clique.map(|(bounds, threads)| max_clique_exact(g, bounds, threads));
    let (omega, gamma_k) = match &result {
        Some(r) => {
            let gamma = if r.vertices.is_empty() {
                None
            } else {
                kcore_recall_with(g, &cores, &r.vertices).ok()
            };
            (Some(r.size), gamma)
        }
        None => (None, None),
    };

    let row = GraphStats {
        n,
        m: g.m(),
        d_max: g.max_degree(),
        d_avg: if n == 0 { 0.0 } else { 2.0 * g.m() as f64 / n as f64 },
        mean_cc,
        global_cc,
        max_triangles: tc.max_t,
        avg_triangles: tc.avg_t,
        sqrt_2t: (2.0 * tc.max_t as f64).sqrt(),
        degeneracy: cores.degeneracy,
        omega,
        gamma_k,
    };
    (row, result)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_row() {
        let s = stats(&Graph::empty(1), true);
        assert_eq!((s.n, s.m, s.d_max), (1, 0, 0));
        assert_eq!(s.d_avg, 0.0);
        assert_eq!(s.mean_cc, 0.0);
        assert_eq!((s.max_triangles, s.avg_triangles, s.sqrt_2t), (0, 0.0, 0.0));
        assert_eq!(s.degeneracy, 0);
        assert_eq!(s.omega, Some(1));
        assert_eq!(s.gamma_k, Some(1.0));
        assert_eq!(s.csv_row("one"), "one,1,0,0,0.0000,0.0000,0,0.0000,0.0000,0,1,1.0000");
    }

    #[test]
    fn no_clique_columns_blank() {
        let s = stats(&Graph::from_edges(2, &[(0, 1)]), false);
        assert_eq!(s.omega, None);
        assert!(s.csv_row("e").ends_with(",1,,"));
        assert_eq!(STATS_CSV_HEADER.split(',').count(), s.csv_row("e").split(',').count());
    }
}
