// SPDX-License-Identifier: Apache-2.0

#![allow(dead_code)]

pub mod oracle;

use proptest::prelude::*;

/// Vertex count and an edge list drawn with edge probability in `[0.1, 0.9]`.
pub fn small_graph(max_n: usize) -> impl Strategy<Value = (usize, Vec<(u32, u32)>)> {
    (1..=max_n, 0.1f64..0.9, any::<u64>()).prop_map(|(n, p, seed)| {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        (n, edges)
    })
}

/// Arbitrary arcs, possibly with loops and duplicates.
pub fn arc_soup(max_n: u32, max_arcs: usize) -> impl Strategy<Value = (usize, Vec<(u32, u32)>)> {
    (1..=max_n).prop_flat_map(move |n| (Just(n as usize), prop::collection::vec((0..n, 0..n), 0..=max_arcs)))
}

/// Temporal contacts with integer times from a small range, so ties are common.
pub fn contacts(max_n: u32, max_contacts: usize) -> impl Strategy<Value = (usize, Vec<(u32, u32, f64)>)> {
    (2..=max_n, 1u32..12).prop_flat_map(move |(n, span)| {
        (
            Just(n as usize),
            prop::collection::vec((0..n, 0..n, (0..span).prop_map(f64::from)), 0..=max_contacts),
        )
    })
}
