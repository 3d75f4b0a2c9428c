// SPDX-License-Identifier: Apache-2.0

use crate::graph::{Graph, VertexId};

/// Core numbers and the peeling order that produced them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreDecomposition {
    pub core_number: Vec<u32>,
    /// `K(G)`, the largest core number.
    pub degeneracy: u32,
    /// Vertices in the order they were peeled (a degeneracy ordering).
    pub order: Vec<VertexId>,
    /// `position[v]` is the index of `v` in `order`.
    pub position: Vec<u32>,
    /// Vertices of the `K(G)`-core, ascending.
    pub max_core_vertices: Vec<VertexId>,
}

impl CoreDecomposition {
    /// Neighbors of `v` peeled after it. There are at most `core_number[v]`.
    pub fn later_neighbors<'g>(&'g self, g: &'g Graph, v: VertexId) -> impl Iterator<Item = VertexId> + 'g {
        let p = self.position[v as usize];
        g.neighbors(v)
            .iter()
            .copied()
            .filter(move |&w| self.position[w as usize] > p)
    }
}

/// Bucket-queue minimum-degree peeling, `O(n + m)`.
pub fn core_decomposition(g: &Graph) -> CoreDecomposition {
    let n = g.n();
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let max_deg = deg.iter().copied().max().unwrap_or(0);

    // bin[d] = start of the degree-d block in `vert`
    let mut bin = vec![0usize; max_deg + 1];
    for &d in &deg {
        bin[d] += 1;
    }
    let mut start = 0;
    for b in bin.iter_mut() {
        let c = *b;
        *b = start;
        start += c;
    }
    let mut vert = vec![0 as VertexId; n];
    let mut pos = vec![0usize; n];
    for v in 0..n {
        let d = deg[v];
        pos[v] = bin[d];
        vert[bin[d]] = v as VertexId;
        bin[d] += 1;
    }
    for d in (1..=max_deg).rev() {
        bin[d] = bin[d - 1];
    }
    bin[0] = 0;

    for i in 0..n {
        let v = vert[i] as usize;
        for &u in g.neighbors(v as VertexId) {
            let u = u as usize;
            if deg[u] > deg[v] {
                let du = deg[u];
                let pu = pos[u];
                let pw = bin[du];
                let w = vert[pw] as usize;
                if u != w {
                    vert.swap(pu, pw);
                    pos[u] = pw;
                    pos[w] = pu;
                }
                bin[du] += 1;
                deg[u] -= 1;
            }
        }
    }

    let core_number: Vec<u32> = deg.iter().map(|&d| d as u32).collect();
    let degeneracy = core_number.iter().copied().max().unwrap_or(0);
    let max_core_vertices = (0..n as VertexId)
        .filter(|&v| core_number[v as usize] == degeneracy)
        .collect();
    CoreDecomposition {
        position: pos.iter().map(|&p| p as u32).collect(),
        core_number,
        degeneracy,
        order: vert,
        max_core_vertices,
    }
}
