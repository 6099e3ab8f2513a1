//! Threaded Monte-Carlo driver.
//!
//! Workers pull chunk indices from a shared counter; each chunk's sums land
//! in its own slot and the slots are merged in index order afterwards, so
//! the estimate is bit-identical for any thread count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use fracosc::subordination::{MCEstimate, McAccumulator, McPlan};

/// Thread count from the flag or environment, else the available cores.
pub fn resolve_threads(requested: Option<usize>) -> usize {
    requested
        .filter(|&n| n > 0)
        .unwrap_or_else(|| thread::available_parallelism().map_or(1, |n| n.get()))
}

pub fn run_plan(plan: &McPlan, threads: usize) -> MCEstimate {
    let chunks: Vec<_> = plan.chunks().collect();
    let threads = threads.clamp(1, chunks.len().max(1));
    if threads == 1 {
        return plan.reduce(chunks.into_iter().map(|r| plan.run_chunk(r)));
    }
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<McAccumulator>>> = chunks.iter().map(|_| Mutex::new(None)).collect();
    thread::scope(|s| {
        for _ in 0..threads {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(range) = chunks.get(i) else { break };
                let acc = plan.run_chunk(range.clone());
                *slots[i].lock().expect("slot lock") = Some(acc);
            });
        }
    });
    plan.reduce(
        slots
            .into_iter()
            .map(|m| m.into_inner().expect("slot lock").expect("every chunk ran")),
    )
}
