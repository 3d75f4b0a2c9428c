// SPDX-License-Identifier: Apache-2.0

mod common;

use common::{oracle, small_graph};
use maxclique::metrics::core_decomposition;
use maxclique::{max_clique_exact, max_clique_heuristic_with, verify_clique, Graph, SearchBounds, Status};
use proptest::prelude::*;

fn bounds(lb: usize, ub: Option<usize>) -> SearchBounds {
    SearchBounds::new(lb, ub).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn exact_matches_enumeration((n, edges) in small_graph(40)) {
        let g = Graph::from_edges(n, &edges);
        let omega = oracle::clique_number(n, &edges);
        let r = max_clique_exact(&g, &SearchBounds::default(), 2);
        prop_assert_eq!(r.size, omega);
        prop_assert_eq!(r.status, Status::Optimal);
        prop_assert!(oracle::is_clique(n, &edges, &r.vertices));
        prop_assert!(r.size - 1 <= core_decomposition(&g).degeneracy as usize);
    }

    #[test]
    fn size_does_not_depend_on_threads((n, edges) in small_graph(40)) {
        let g = Graph::from_edges(n, &edges);
        let sizes: Vec<usize> = [1, 2, 4, 8]
            .iter()
            .map(|&t| {
                let r = max_clique_exact(&g, &SearchBounds::default(), t);
                assert!(verify_clique(&g, &r.vertices));
                r.size
            })
            .collect();
        prop_assert!(sizes.windows(2).all(|w| w[0] == w[1]), "{:?}", sizes);
    }

    #[test]
    fn heuristic_is_a_lower_bound((n, edges) in small_graph(40), threads in 1usize..5) {
        let g = Graph::from_edges(n, &edges);
        let h = max_clique_heuristic_with(&g, threads);
        prop_assert!(oracle::is_clique(n, &edges, &h.vertices));
        prop_assert!(h.size <= oracle::clique_number(n, &edges));
        if g.m() > 0 {
            prop_assert!(h.size >= 2);
        }
    }

    #[test]
    fn upper_bound_truncates((n, edges) in small_graph(32), ub_frac in 0.0f64..1.5) {
        let g = Graph::from_edges(n, &edges);
        let omega = oracle::clique_number(n, &edges);
        let ub = ((omega as f64 * ub_frac).ceil() as usize).max(1);
        let r = max_clique_exact(&g, &bounds(0, Some(ub)), 2);
        prop_assert_eq!(r.size, ub.min(omega));
        prop_assert!(oracle::is_clique(n, &edges, &r.vertices));
        if ub < omega {
            prop_assert_eq!(r.status, Status::UpperBoundReached);
        }
    }

    #[test]
    fn lower_bound_is_sound((n, edges) in small_graph(32)) {
        let g = Graph::from_edges(n, &edges);
        let omega = oracle::clique_number(n, &edges);
        let h = max_clique_heuristic_with(&g, 1).size;
        for lb in [0, h, omega - 1, omega, omega + 3] {
            let r = max_clique_exact(&g, &bounds(lb, None), 2);
            if lb < omega {
                prop_assert_eq!(r.size, omega);
                prop_assert_eq!(r.status, Status::Optimal);
                prop_assert!(oracle::is_clique(n, &edges, &r.vertices));
            } else {
                prop_assert_eq!(r.status, Status::NoneAboveLowerBound);
                prop_assert!(r.vertices.is_empty());
                prop_assert_eq!(r.size, lb);
            }
        }
    }
}

#[test]
fn complete_graph_truncations() {
    let e: Vec<_> = (0..10u32).flat_map(|u| (u + 1..10).map(move |v| (u, v))).collect();
    let g = Graph::from_edges(10, &e);
    for ub in [2, 5, 10] {
        let r = max_clique_exact(&g, &bounds(0, Some(ub)), 4);
        assert_eq!(r.size, ub);
        assert!(verify_clique(&g, &r.vertices));
    }
}

#[test]
fn inverted_bounds_are_rejected() {
    assert!(SearchBounds::new(5, Some(4)).is_err());
    assert!(SearchBounds::new(0, Some(0)).is_err());
}
