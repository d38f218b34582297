// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Parallel drivers. Work is split across scoped threads and merged back
//! in input order, so output does not depend on scheduling.

use std::num::NonZeroUsize;
use std::thread;

use delannoy_core::analysis::{GridSpec, ScanReport};
use delannoy_core::verify::{verify_identity, Fault, VerifyReport};

fn workers(requested: Option<usize>) -> usize {
    requested
        .or_else(|| thread::available_parallelism().ok().map(NonZeroUsize::get))
        .unwrap_or(1)
        .max(1)
}

/// Runs each `(id, depth)` on its own thread (at most `jobs` at a time).
pub fn run_plan(plan: &[(&'static str, usize)], fault: Option<&Fault>, jobs: Option<usize>) -> Vec<VerifyReport> {
    let mut out = Vec::with_capacity(plan.len());
    for batch in plan.chunks(workers(jobs)) {
        thread::scope(|s| {
            let handles: Vec<_> = batch
                .iter()
                .map(|(id, depth)| s.spawn(move || verify_identity(id, *depth, fault).expect("planned id")))
                .collect();
            out.extend(handles.into_iter().map(|h| h.join().expect("verifier thread panicked")));
        });
    }
    out
}

/// Splits the grid's points into contiguous chunks, scans each, and
/// concatenates the per-chunk results in point order.
pub fn scan_parallel(grid: &GridSpec, scan: fn(&GridSpec) -> ScanReport, jobs: Option<usize>) -> ScanReport {
    let chunk = grid.points.len().div_ceil(workers(jobs)).max(1);
    let parts: Vec<ScanReport> = thread::scope(|s| {
        let handles: Vec<_> = grid
            .points
            .chunks(chunk)
            .map(|pts| {
                let sub = GridSpec::new(pts.to_vec(), grid.n_max);
                s.spawn(move || scan(&sub))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("scan thread panicked")).collect()
    });
    let mut merged = scan(&GridSpec::new(Vec::new(), grid.n_max));
    merged.grid = grid.clone();
    for p in parts {
        merged.checks += p.checks;
        merged.violations.extend(p.violations);
        merged.zero_hits.extend(p.zero_hits);
        merged.skipped.extend(p.skipped);
    }
    merged
}

#[cfg(test)]
mod tests {
    use super::*;
    use delannoy_core::analysis::{default_conjecture_grid, scan_conjecture};

    #[test]
    fn parallel_scan_matches_sequential() {
        let mut grid = default_conjecture_grid();
        grid.n_max = 12;
        let seq = scan_conjecture(&grid);
        for jobs in [1, 3, 8] {
            assert_eq!(scan_parallel(&grid, scan_conjecture, Some(jobs)), seq);
        }
    }

    #[test]
    fn plan_order_is_kept() {
        let plan = [("jacobi", 2), ("square", 2), ("recurrences", 2)];
        let ids: Vec<String> = run_plan(&plan, None, Some(2)).into_iter().map(|r| r.identity_id).collect();
        assert_eq!(ids, ["jacobi", "square", "recurrences"]);
    }
}
