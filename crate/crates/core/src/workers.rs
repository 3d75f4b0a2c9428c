// SPDX-License-Identifier: Apache-2.0

use std::sync::atomic::{AtomicUsize, Ordering};

const WORKER_STACK: usize = 64 << 20;

/// Runs `work` on `threads` scoped threads (inline when `threads <= 1`) and
/// collects what each returns.
pub(crate) fn scoped_workers<R, F>(threads: usize, work: F) -> Vec<R>
where
    R: Send,
    F: Fn() -> R + Sync,
{
    if threads <= 1 {
        return vec![work()];
    }
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..threads)
            .map(|i| {
                std::thread::Builder::new()
                    .name(format!("maxclique-{i}"))
                    .stack_size(WORKER_STACK)
                    .spawn_scoped(s, &work)
                    .expect("failed to spawn worker thread")
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|e| std::panic::resume_unwind(e)))
            .collect()
    })
}

/// Hands out `[start, end)` ranges of `0..len` in chunks.
pub(crate) struct ChunkCursor {
    next: AtomicUsize,
    len: usize,
    chunk: usize,
}

impl ChunkCursor {
    pub(crate) fn new(len: usize, chunk: usize) -> Self {
        ChunkCursor {
            next: AtomicUsize::new(0),
            len,
            chunk: chunk.max(1),
        }
    }

    pub(crate) fn next_range(&self) -> Option<std::ops::Range<usize>> {
        let start = self.next.fetch_add(self.chunk, Ordering::Relaxed);
        (start < self.len).then(|| start..(start + self.chunk).min(self.len))
    }
}

pub(crate) fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}
