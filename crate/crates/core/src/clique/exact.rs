// SPDX-License-Identifier: Apache-2.0

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use crate::bitset::{self, BitMatrix};
use crate::clique::heuristic::greedy_clique;
use crate::clique::{CliqueResult, SearchBounds, SharedBest, Status};
use crate::graph::{Graph, VertexId};
use crate::metrics::{core_decomposition, CoreDecomposition};
use crate::workers::{scoped_workers, ChunkCursor};

/// Steps between wall-clock checks.
const CLOCK_EVERY: u64 = 1 << 10;
/// Steps between refreshes of the worker's copy of the shared incumbent.
const REFRESH_EVERY: u64 = 1 << 14;

struct Control {
    stop: AtomicBool,
    timed_out: AtomicBool,
    deadline: Option<Instant>,
    steps: AtomicU64,
}

impl Control {
    #[inline]
    fn stopped(&self) -> bool {
        self.stop.load(Ordering::Relaxed)
    }

    fn check_clock(&self) {
        if let Some(deadline) = self.deadline {
            if Instant::now() >= deadline {
                self.timed_out.store(true, Ordering::Relaxed);
                self.stop.store(true, Ordering::Relaxed);
            }
        }
    }
}

/// Exact maximum clique with lower/upper-bound parameterization.
///
/// * Only cliques larger than `max(bounds.lb, heuristic size)` are searched
///   for. If none exists the result has status
///   [`Status::NoneAboveLowerBound`], size `lb` and an empty witness (or the
///   heuristic clique, when it already beat `lb`).
/// * Once a clique of size `bounds.ub` is held, the search stops and that
///   clique is returned ([`Status::UpperBoundReached`]).
/// * When the time limit expires the best clique so far is returned with
///   [`Status::TimeLimit`].
///
/// `threads` workers pull root vertices from a shared queue; each keeps its
/// own incumbent for pruning, publishes it when a root's subtree is done and
/// re-reads the shared value at every root and every few thousand steps.
/// The reported size does not depend on `threads`.
pub fn max_clique_exact(g: &Graph, bounds: &SearchBounds, threads: usize) -> CliqueResult {
    let started = Instant::now();
    let threads = threads.max(1);
    let deadline = bounds.time_limit().map(|d| started + d);

    let cores = core_decomposition(g);
    let proven_ub = if g.n() == 0 { 0 } else { cores.degeneracy as usize + 1 };
    let target = bounds.ub().map_or(proven_ub, |ub| ub.min(proven_ub));

    let heuristic_started = Instant::now();
    let mut warm = greedy_clique(g, threads);
    let heuristic_time = heuristic_started.elapsed();
    let heuristic_size = warm.len();

    let shared = SharedBest::new(bounds.lb());
    warm.truncate(target.max(bounds.lb() + 1));
    shared.offer(&warm);

    let ctl = Control {
        stop: AtomicBool::new(false),
        timed_out: AtomicBool::new(false),
        deadline,
        steps: AtomicU64::new(0),
    };

    let (size, witness) = shared.snapshot();
    let done_already = !witness.is_empty() && size >= target;
    if !done_already && proven_ub > bounds.lb() {
        // highest core numbers first
        let roots: Vec<VertexId> = cores.order.iter().rev().copied().collect();
        let cursor = ChunkCursor::new(roots.len(), 1);
        scoped_workers(threads, || {
            let mut search = Search::new(g, &cores, &shared, &ctl, target);
            while let Some(r) = cursor.next_range() {
                if ctl.stopped() {
                    break;
                }
                if !search.root(roots[r.start]) {
                    break;
                }
            }
            ctl.steps.fetch_add(search.steps, Ordering::Relaxed);
        });
    }

    let (_, mut vertices) = shared.snapshot();
    let timed_out = ctl.timed_out.load(Ordering::Relaxed);
    let len = vertices.len();
    let status = match bounds.ub() {
        _ if len == 0 && timed_out => Status::TimeLimit,
        _ if len == 0 => Status::NoneAboveLowerBound,
        Some(ub) if len > ub => Status::UpperBoundReached,
        _ if len >= proven_ub => Status::Optimal,
        Some(ub) if len == ub => Status::UpperBoundReached,
        _ if timed_out => Status::TimeLimit,
        _ => Status::Optimal,
    };
    if let (Status::UpperBoundReached, Some(ub)) = (status, bounds.ub()) {
        vertices.truncate(ub);
    }
    let size = if vertices.is_empty() {
        bounds.lb()
    } else {
        vertices.len()
    };
    vertices.sort_unstable();

    CliqueResult {
        size,
        vertices,
        status,
        steps: ctl.steps.load(Ordering::Relaxed),
        wall_time: started.elapsed(),
        heuristic_size,
        heuristic_time,
        improvements: shared.trace(),
    }
}

/// Per-worker branch and bound state.
struct Search<'a> {
    g: &'a Graph,
    cores: &'a CoreDecomposition,
    shared: &'a SharedBest,
    ctl: &'a Control,
    target: usize,
    /// Largest clique size known to this worker.
    bound: usize,
    steps: u64,
    /// Global vertex -> index in the current root's candidate list.
    slot: Vec<u32>,
    root: VertexId,
    cand: Vec<VertexId>,
    full: BitMatrix,
    degree: Vec<u32>,
    alive: Vec<bool>,
    queue: Vec<usize>,
    kept: Vec<usize>,
    /// Local index -> global vertex for the ordered subproblem.
    verts: Vec<VertexId>,
    adj: BitMatrix,
    levels: Vec<Vec<u64>>,
    stack: Vec<usize>,
    pending: Vec<VertexId>,
}

impl<'a> Search<'a> {
    fn new(
        g: &'a Graph,
        cores: &'a CoreDecomposition,
        shared: &'a SharedBest,
        ctl: &'a Control,
        target: usize,
    ) -> Self {
        Search {
            g,
            cores,
            shared,
            ctl,
            target,
            bound: shared.size(),
            steps: 0,
            slot: vec![u32::MAX; g.n()],
            root: 0,
            cand: Vec::new(),
            full: BitMatrix::new(0, 0),
            degree: Vec::new(),
            alive: Vec::new(),
            queue: Vec::new(),
            kept: Vec::new(),
            verts: Vec::new(),
            adj: BitMatrix::new(0, 0),
            levels: Vec::new(),
            stack: Vec::new(),
            pending: Vec::new(),
        }
    }

    fn refresh(&mut self) {
        self.bound = self.bound.max(self.shared.size());
    }

    /// Searches cliques whose earliest-peeled vertex is `v`. Returns false
    /// when no later root (in reverse peeling order) can beat the incumbent.
    fn root(&mut self, v: VertexId) -> bool {
        self.refresh();
        self.ctl.check_clock();
        if self.ctl.stopped() {
            return false;
        }
        // Core numbers never increase along reverse peeling order.
        if (self.cores.core_number[v as usize] as usize) < self.bound {
            return false;
        }
        self.root = v;
        self.cand.clear();
        self.cand.extend(self.cores.later_neighbors(self.g, v));
        if self.cand.len() < self.bound {
            return true;
        }
        if !self.build_subproblem() {
            return true;
        }

        let words = self.adj.words();
        if self.levels.is_empty() {
            self.levels.push(Vec::new());
        }
        let top = &mut self.levels[0];
        top.clear();
        top.resize(words, 0);
        for i in 0..self.verts.len() {
            bitset::set(top, i);
        }
        self.stack.clear();
        self.pending.clear();
        self.expand(0, 1);

        if !self.pending.is_empty() {
            self.shared.offer(&self.pending);
        }
        true
    }

    /// Maps the candidates to local indices, drops those that cannot be in
    /// a clique larger than `bound` together with the root, and orders the
    /// rest by descending degree inside the candidate set (ties to lower
    /// vertex id). Returns false if nothing useful is left.
    fn build_subproblem(&mut self) -> bool {
        let p = self.cand.len();
        for (i, &u) in self.cand.iter().enumerate() {
            self.slot[u as usize] = i as u32;
        }
        self.full.reset(p, p);
        for i in 0..p {
            let u = self.cand[i];
            let row = self.full.row_mut(i);
            for &w in self.g.neighbors(u) {
                let j = self.slot[w as usize];
                if j != u32::MAX {
                    bitset::set(row, j as usize);
                }
            }
        }
        for &u in &self.cand {
            self.slot[u as usize] = u32::MAX;
        }

        // A clique of size bound+1 through the root needs bound-1 neighbors
        // of each member inside the candidate set.
        let need = self.bound.saturating_sub(1);
        self.degree.clear();
        self.degree
            .extend((0..p).map(|i| bitset::count(self.full.row(i)) as u32));
        self.alive.clear();
        self.alive.resize(p, true);
        self.queue.clear();
        for i in 0..p {
            if (self.degree[i] as usize) < need {
                self.alive[i] = false;
                self.queue.push(i);
            }
        }
        while let Some(i) = self.queue.pop() {
            for j in bitset::ones(self.full.row(i)) {
                if self.alive[j] {
                    self.degree[j] -= 1;
                    if (self.degree[j] as usize) < need {
                        self.alive[j] = false;
                        self.queue.push(j);
                    }
                }
            }
        }
        self.kept.clear();
        self.kept.extend((0..p).filter(|&i| self.alive[i]));
        if self.kept.len() < self.bound {
            return false;
        }

        let (degree, cand) = (&self.degree, &self.cand);
        self.kept.sort_by_key(|&i| (std::cmp::Reverse(degree[i]), cand[i]));
        let q = self.kept.len();
        self.verts.clear();
        self.verts.extend(self.kept.iter().map(|&i| self.cand[i]));
        // reuse slot as old-index -> new-index for the remap
        for (new, &old) in self.kept.iter().enumerate() {
            self.slot[old] = new as u32;
        }
        self.adj.reset(q, q);
        for (new, &old) in self.kept.iter().enumerate() {
            for j in bitset::ones(self.full.row(old)) {
                if self.alive[j] {
                    let jj = self.slot[j] as usize;
                    bitset::set(self.adj.row_mut(new), jj);
                }
            }
        }
        for &old in &self.kept {
            self.slot[old] = u32::MAX;
        }
        true
    }

    /// `size` counts the root plus the local indices on `stack`; the
    /// candidates are `levels[depth]`.
    fn expand(&mut self, depth: usize, size: usize) {
        self.steps += 1;
        if self.steps % CLOCK_EVERY == 0 {
            self.ctl.check_clock();
            if self.steps % REFRESH_EVERY == 0 {
                self.refresh();
            }
        }
        if self.ctl.stopped() {
            return;
        }
        if size > self.bound {
            self.record(size);
            if size >= self.target {
                self.shared.offer(&self.pending);
                self.ctl.stop.store(true, Ordering::Relaxed);
                return;
            }
        }
        if self.levels.len() <= depth + 1 {
            self.levels.push(Vec::new());
        }
        loop {
            let count = bitset::count(&self.levels[depth]);
            if count == 0 || size + count <= self.bound {
                return;
            }
            let i = bitset::first(&self.levels[depth]).expect("nonzero count");
            bitset::clear(&mut self.levels[depth], i);

            let (cur, rest) = self.levels.split_at_mut(depth + 1);
            let next = &mut rest[0];
            next.clear();
            next.resize(cur[depth].len(), 0);
            bitset::and_to(next, &cur[depth], self.adj.row(i));

            self.stack.push(i);
            self.expand(depth + 1, size + 1);
            self.stack.pop();
            if self.ctl.stopped() {
                return;
            }
        }
    }

    fn record(&mut self, size: usize) {
        self.bound = size;
        self.pending.clear();
        self.pending.push(self.root);
        let verts = &self.verts;
        self.pending.extend(self.stack.iter().map(|&i| verts[i]));
        debug_assert_eq!(self.pending.len(), size);
    }
}
