//! Range-partitioned scans over scoped threads.
//!
//! A universe of `total` candidates is split into contiguous ranges, one
//! per thread; partial results come back in range order so the caller's
//! fold is independent of scheduling. Sampled universes draw each index
//! from its own RNG stream, so the split points never change what is
//! sampled.

pub fn split_ranges(total: u64, threads: usize) -> Vec<(u64, u64)> {
    let threads = threads.max(1) as u64;
    let chunk = total.div_ceil(threads).max(1);
    let mut out = Vec::new();
    let mut lo = 0;
    while lo < total {
        let hi = (lo + chunk).min(total);
        out.push((lo, hi));
        lo = hi;
    }
    if out.is_empty() {
        out.push((0, 0));
    }
    out
}

/// Runs `scan` on each range across `threads` OS threads and returns the
/// partial results in range order.
pub fn scan_partitioned<S, F>(total: u64, threads: usize, scan: F) -> Vec<S>
where
    S: Send,
    F: Fn(u64, u64) -> S + Sync,
{
    let ranges = split_ranges(total, threads);
    if threads <= 1 || ranges.len() <= 1 {
        return ranges.into_iter().map(|(lo, hi)| scan(lo, hi)).collect();
    }
    let scan = &scan;
    std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(lo, hi)| scope.spawn(move || scan(lo, hi)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("scan thread")).collect()
    })
}
