// SPDX-License-Identifier: Apache-2.0

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::graph::VertexId;

/// Incumbent shared by search workers.
///
/// The size only grows. Readers poll it lock-free; a replacement takes the
/// lock, so the stored clique always matches the stored size once a first
/// clique has been offered. Until then the size holds the initial lower
/// bound and the clique is empty.
#[derive(Debug)]
pub struct SharedBest {
    size: AtomicUsize,
    inner: Mutex<Inner>,
}

#[derive(Debug, Default)]
struct Inner {
    clique: Vec<VertexId>,
    trace: Vec<usize>,
}

impl SharedBest {
    pub fn new(initial_size: usize) -> Self {
        SharedBest {
            size: AtomicUsize::new(initial_size),
            inner: Mutex::new(Inner::default()),
        }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size.load(Ordering::Acquire)
    }

    /// Installs `clique` if it is strictly larger than the incumbent.
    pub fn offer(&self, clique: &[VertexId]) -> bool {
        if clique.len() <= self.size() {
            return false;
        }
        let mut inner = self.inner.lock().expect("incumbent lock poisoned");
        if clique.len() <= self.size.load(Ordering::Acquire) {
            return false;
        }
        inner.clique.clear();
        inner.clique.extend_from_slice(clique);
        inner.trace.push(clique.len());
        self.size.store(clique.len(), Ordering::Release);
        true
    }

    /// Current size and clique, read consistently.
    pub fn snapshot(&self) -> (usize, Vec<VertexId>) {
        let inner = self.inner.lock().expect("incumbent lock poisoned");
        (self.size.load(Ordering::Acquire), inner.clique.clone())
    }

    /// Sizes installed so far, in order.
    pub fn trace(&self) -> Vec<usize> {
        self.inner.lock().expect("incumbent lock poisoned").trace.clone()
    }
}
