//! Node and wall-clock limits shared by the exhaustive searches.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

/// Limits for one search. The default is unlimited.
#[derive(Clone, Debug, Default)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
    pub cancel: Option<Arc<AtomicBool>>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
            ..Self::default()
        }
    }

    pub fn with_time(mut self, limit: Duration) -> Self {
        self.max_time = Some(limit);
        self
    }

    pub fn with_cancel(mut self, flag: Arc<AtomicBool>) -> Self {
        self.cancel = Some(flag);
        self
    }

    pub fn start(&self) -> Meter {
        Meter {
            nodes: 0,
            max_nodes: self.max_nodes,
            deadline: self.max_time.map(|d| Instant::now() + d),
            cancel: self.cancel.clone(),
            started: Instant::now(),
        }
    }
}

/// The search ran out of budget (or was cancelled) before deciding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Exhausted;

/// Running counter for a [`Budget`].
#[derive(Debug)]
pub struct Meter {
    nodes: u64,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
    cancel: Option<Arc<AtomicBool>>,
    started: Instant,
}

impl Meter {
    /// Counts one node; fails once any limit is hit.
    #[inline]
    pub fn tick(&mut self) -> Result<(), Exhausted> {
        self.nodes += 1;
        if self.max_nodes.is_some_and(|m| self.nodes > m) {
            return Err(Exhausted);
        }
        // clock and flag reads are comparatively slow
        if self.nodes & 0x3ff == 0 {
            if self.deadline.is_some_and(|d| Instant::now() >= d) {
                return Err(Exhausted);
            }
            if self
                .cancel
                .as_ref()
                .is_some_and(|c| c.load(Ordering::Relaxed))
            {
                return Err(Exhausted);
            }
        }
        Ok(())
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    pub fn elapsed(&self) -> Duration {
        self.started.elapsed()
    }
}
