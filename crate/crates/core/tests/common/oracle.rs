// SPDX-License-Identifier: Apache-2.0

//! Brute-force reference implementations. Nothing here touches the library;
//! every function works on plain vertex counts and edge lists.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

/// Adjacency masks for graphs with at most 64 vertices.
pub fn masks(n: usize, edges: &[(u32, u32)]) -> Vec<u64> {
    assert!(n <= 64);
    let mut adj = vec![0u64; n];
    for &(u, v) in edges {
        if u != v {
            adj[u as usize] |= 1 << v;
            adj[v as usize] |= 1 << u;
        }
    }
    adj
}

/// Clique number by enumerating every maximal clique.
pub fn clique_number(n: usize, edges: &[(u32, u32)]) -> usize {
    fn expand(adj: &[u64], size: usize, cand: u64, excl: u64, best: &mut usize) {
        if cand == 0 && excl == 0 {
            *best = (*best).max(size);
            return;
        }
        let (mut cand, mut excl) = (cand, excl);
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            expand(adj, size + 1, cand & adj[v], excl & adj[v], best);
            cand &= !(1 << v);
            excl |= 1 << v;
        }
    }
    let adj = masks(n, edges);
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0;
    expand(&adj, 0, all, 0, &mut best);
    best
}

pub fn is_clique(n: usize, edges: &[(u32, u32)], vertices: &[u32]) -> bool {
    let adj = masks(n, edges);
    let set: BTreeSet<u32> = vertices.iter().copied().collect();
    set.len() == vertices.len()
        && vertices.iter().all(|&v| (v as usize) < n)
        && vertices
            .iter()
            .all(|&u| vertices.iter().all(|&v| u == v || adj[u as usize] >> v & 1 == 1))
}

/// Distinct undirected edges, loops removed, each as `(min, max)`.
pub fn simple_edges(edges: &[(u32, u32)]) -> BTreeSet<(u32, u32)> {
    edges
        .iter()
        .filter(|(u, v)| u != v)
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect()
}

/// Pairs `{u, v}` present in both directions.
pub fn reciprocal_pairs(arcs: &[(u32, u32)]) -> BTreeSet<(u32, u32)> {
    let mut out = BTreeSet::new();
    for &(u, v) in arcs {
        if u != v && arcs.contains(&(v, u)) {
            out.insert((u.min(v), u.max(v)));
        }
    }
    out
}

pub fn adjacency_lists(n: usize, edges: &[(u32, u32)]) -> Vec<BTreeSet<u32>> {
    let mut adj = vec![BTreeSet::new(); n];
    for (u, v) in simple_edges(edges) {
        adj[u as usize].insert(v);
        adj[v as usize].insert(u);
    }
    adj
}

/// Connected components by BFS, each sorted, listed by smallest member.
pub fn components(n: usize, edges: &[(u32, u32)]) -> Vec<Vec<u32>> {
    let adj = adjacency_lists(n, edges);
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s as u32];
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    comp.push(w);
                    queue.push_back(w as usize);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Triangles through each vertex by checking every vertex triple.
pub fn triangles(n: usize, edges: &[(u32, u32)]) -> Vec<u64> {
    let adj = adjacency_lists(n, edges);
    let has = |a: usize, b: usize| adj[a].contains(&(b as u32));
    let mut t = vec![0u64; n];
    for a in 0..n {
        for b in a + 1..n {
            if !has(a, b) {
                continue;
            }
            for c in b + 1..n {
                if has(a, c) && has(b, c) {
                    t[a] += 1;
                    t[b] += 1;
                    t[c] += 1;
                }
            }
        }
    }
    t
}

/// `(mean local clustering, global transitivity)`; degree < 2 counts as 0.
pub fn clustering(n: usize, edges: &[(u32, u32)]) -> (f64, f64) {
    if n == 0 {
        return (0.0, 0.0);
    }
    let adj = adjacency_lists(n, edges);
    let t = triangles(n, edges);
    let mut local = 0.0;
    let mut wedges = 0u64;
    for v in 0..n {
        let d = adj[v].len() as u64;
        let w = d * d.saturating_sub(1) / 2;
        wedges += w;
        if w > 0 {
            local += t[v] as f64 / w as f64;
        }
    }
    let closed: u64 = t.iter().sum();
    let global = if wedges == 0 {
        0.0
    } else {
        closed as f64 / wedges as f64
    };
    (local / n as f64, global)
}

/// Core numbers by recomputing the k-core from scratch for every k.
pub fn core_numbers(n: usize, edges: &[(u32, u32)]) -> Vec<u32> {
    let adj = adjacency_lists(n, edges);
    let mut core = vec![0u32; n];
    for k in 1..=n as u32 {
        let mut alive = vec![true; n];
        loop {
            let drop: Vec<usize> = (0..n)
                .filter(|&v| alive[v] && (adj[v].iter().filter(|&&w| alive[w as usize]).count() as u32) < k)
                .collect();
            if drop.is_empty() {
                break;
            }
            for v in drop {
                alive[v] = false;
            }
        }
        if !alive.iter().any(|&a| a) {
            break;
        }
        for v in 0..n {
            if alive[v] {
                core[v] = k;
            }
        }
    }
    core
}

/// For each source, the vertices reachable by a path of arcs with strictly
/// increasing times, by relaxing earliest arrival times to a fixed point.
pub fn temporal_reach(n: usize, arcs: &[(u32, u32, f64)]) -> Vec<BTreeSet<u32>> {
    (0..n)
        .map(|s| {
            let mut arrival = vec![f64::INFINITY; n];
            arrival[s] = f64::NEG_INFINITY;
            loop {
                let mut changed = false;
                for &(u, v, t) in arcs {
                    if arrival[u as usize] < t && t < arrival[v as usize] {
                        arrival[v as usize] = t;
                        changed = true;
                    }
                }
                if !changed {
                    break;
                }
            }
            (0..n as u32)
                .filter(|&w| w as usize != s && arrival[w as usize].is_finite())
                .collect()
        })
        .collect()
}
