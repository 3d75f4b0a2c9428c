// SPDX-License-Identifier: Apache-2.0

//! Undirected simple graphs in compressed sparse row form.

use std::collections::VecDeque;

use thiserror::Error;

use crate::parse::{label_cmp, sort_labels, EdgeList};

/// Dense vertex index in `[0, n)`.
pub type VertexId = u32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

/// Immutable undirected simple graph.
///
/// Neighbor lists are strictly ascending, symmetric and loop-free. Every
/// vertex keeps the label it had in the input so results can be reported in
/// the caller's naming.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
    labels: Vec<String>,
}

impl Graph {
    /// Builds a graph on `n` vertices labelled `0..n` from arbitrary
    /// undirected pairs. Self-loops and duplicates are dropped.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::from_edges_with_labels(labels, edges.iter().copied())
    }

    /// Builds a graph whose vertex `i` carries `labels[i]`.
    ///
    /// # Panics
    /// If an endpoint is `>= labels.len()`.
    pub fn from_edges_with_labels<I>(labels: Vec<String>, edges: I) -> Self
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let n = labels.len();
        let mut pairs: Vec<(VertexId, VertexId)> = edges
            .into_iter()
            .filter(|&(u, v)| u != v)
            .map(|(u, v)| if u < v { (u, v) } else { (v, u) })
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        Self::from_sorted_unique_pairs(labels, &pairs, n)
    }

    fn from_sorted_unique_pairs(labels: Vec<String>, pairs: &[(VertexId, VertexId)], n: usize) -> Self {
        let mut degree = vec![0usize; n];
        for &(u, v) in pairs {
            assert!((v as usize) < n, "edge endpoint {v} out of range for {n} vertices");
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut targets = vec![0; pairs.len() * 2];
        // Pairs are sorted by (u, v) with u < v. Emitting v into u's list and u
        // into v's list in this order leaves every list ascending: for a fixed
        // w, entries u < w arrive first (in increasing u), then entries v > w.
        for &(u, v) in pairs {
            targets[fill[v as usize]] = u;
            fill[v as usize] += 1;
        }
        for &(u, v) in pairs {
            targets[fill[u as usize]] = v;
            fill[u as usize] += 1;
        }
        Graph {
            offsets,
            targets,
            labels,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_edges(n, &[])
    }

    /// Vertex count.
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Undirected edge count.
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        let v = v as usize;
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn checked_degree(&self, v: usize) -> Result<usize, GraphError> {
        if v < self.n() {
            Ok(self.degree(v as VertexId))
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.n() as VertexId
    }

    /// Each undirected edge once, as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |u| {
            let nbrs = self.neighbors(u);
            let start = nbrs.partition_point(|&w| w <= u);
            nbrs[start..].iter().map(move |&w| (u, w))
        })
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Subgraph induced by `vertices`, renumbered in the given order.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> Graph {
        let mut slot = vec![u32::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            slot[v as usize] = i as u32;
        }
        let labels = vertices.iter().map(|&v| self.labels[v as usize].clone()).collect();
        let edges = vertices.iter().enumerate().flat_map(|(i, &v)| {
            let slot = &slot;
            self.neighbors(v).iter().filter_map(move |&w| {
                let j = slot[w as usize];
                (j != u32::MAX && (i as u32) < j).then_some((i as u32, j))
            })
        });
        Graph::from_edges_with_labels(labels, edges.collect::<Vec<_>>())
    }

    /// Connected components as vertex lists, each ascending, in order of
    /// their smallest vertex id.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in self.vertices() {
            if seen[s as usize] {
                continue;
            }
            seen[s as usize] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in self.neighbors(u) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Induced subgraph on the largest connected component.
    ///
    /// Equal-sized components are ranked by their smallest original label.
    pub fn largest_component(&self) -> Graph {
        let comps = self.components();
        let min_label = |c: &Vec<VertexId>| {
            c.iter()
                .map(|&v| self.label(v))
                .min_by(|a, b| label_cmp(a, b))
                .unwrap_or("")
        };
        let best = comps.iter().reduce(|best, c| match c.len().cmp(&best.len()) {
            std::cmp::Ordering::Greater => c,
            std::cmp::Ordering::Less => best,
            std::cmp::Ordering::Equal => {
                if label_cmp(min_label(c), min_label(best)).is_lt() {
                    c
                } else {
                    best
                }
            }
        });
        match best {
            Some(c) if c.len() == self.n() => self.clone(),
            Some(c) => self.induced_subgraph(c),
            None => Graph::empty(0),
        }
    }
}

/// Turns parsed edges into a simple undirected graph.
///
/// Vertex ids follow label order (see [`label_cmp`]), so numeric inputs keep
/// their natural ordering. With `reciprocal_only` on a directed list, `{u, v}`
/// is kept only when both `(u, v)` and `(v, u)` occur; otherwise every pair is
/// symmetrized. Vertices that lose all their edges stay as isolated vertices.
pub fn build_graph(edges: &EdgeList, reciprocal_only: bool) -> Graph {
    let (labels, remap) = sort_labels(edges.labels.clone());
    let mapped = edges
        .edges
        .iter()
        .map(|&(u, v)| (remap[u as usize], remap[v as usize]))
        .filter(|&(u, v)| u != v);

    if reciprocal_only && edges.directed {
        let mut arcs: Vec<(VertexId, VertexId)> = mapped.collect();
        arcs.sort_unstable();
        arcs.dedup();
        let kept = arcs
            .iter()
            .filter(|&&(u, v)| u < v && arcs.binary_search(&(v, u)).is_ok())
            .copied()
            .collect::<Vec<_>>();
        Graph::from_edges_with_labels(labels, kept)
    } else {
        Graph::from_edges_with_labels(labels, mapped.collect::<Vec<_>>())
    }
}
