//! Internal parallelism budget.
//!
//! The environment variable `CHARTAB_THREADS` caps the number of worker
//! threads used by data-parallel kernels (currently the bitpacked GF(2)
//! multiply); the default is the hardware thread count.  Results never depend
//! on the budget.

use std::sync::OnceLock;

/// Number of worker threads data-parallel kernels may use (≥ 1).
pub fn thread_budget() -> usize {
    static BUDGET: OnceLock<usize> = OnceLock::new();
    *BUDGET.get_or_init(|| {
        if let Ok(v) = std::env::var("CHARTAB_THREADS") {
            if let Ok(n) = v.trim().parse::<usize>() {
                if n >= 1 {
                    return n;
                }
            }
        }
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    })
}
