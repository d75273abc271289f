//! Data-parallel fan-out helpers. With the `parallel` feature (default)
//! independent work items run on the rayon pool; without it, or after
//! `force_sequential(true)`, everything runs on the calling thread.
//! Results are returned in input order either way, so outputs are
//! deterministic regardless of schedule.

use std::sync::atomic::{AtomicBool, Ordering};

static FORCE_SEQ: AtomicBool = AtomicBool::new(false);

/// Runtime switch to the sequential path, used by the benchmark suite
/// to compare both schedulers in one binary.
pub fn force_sequential(on: bool) {
    FORCE_SEQ.store(on, Ordering::Relaxed);
}

pub fn sequential_forced() -> bool {
    FORCE_SEQ.load(Ordering::Relaxed)
}

#[cfg(feature = "parallel")]
pub fn map_vec<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    if sequential_forced() {
        items.into_iter().map(f).collect()
    } else {
        items.into_par_iter().map(f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map_vec<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    items.into_iter().map(f).collect()
}

/// Fallible fan-out; the first error wins.
pub fn try_map_vec<T, U, E, F>(items: Vec<T>, f: F) -> Result<Vec<U>, E>
where
    T: Send,
    U: Send,
    E: Send,
    F: Fn(T) -> Result<U, E> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        if !sequential_forced() {
            return items.into_par_iter().map(f).collect();
        }
    }
    items.into_iter().map(f).collect()
}
