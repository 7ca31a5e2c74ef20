//! Data-parallel sweep helper with a sequential fallback.
//!
//! Randomized verification sweeps map an index range through an independent,
//! pure worker and merge the results by index, so they parallelize trivially.
//! With the `parallel` feature (on by default) the work fans out over rayon;
//! without it, or when [`Parallelism::Sequential`] is requested, the sweep
//! runs in order on one thread. Results are identical either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Execution strategy for sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Parallelism {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[cfg_attr(feature = "parallel", default)]
    Rayon,
}

/// Maps `0..count` through `f`, preserving index order in the output.
pub fn sweep_indexed<T, F>(par: Parallelism, count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match par {
        Parallelism::Sequential => (0..count).map(f).collect(),
        #[cfg(feature = "parallel")]
        Parallelism::Rayon => (0..count).into_par_iter().map(f).collect(),
    }
}
