//! Data-parallel helpers.
//!
//! Every per-source loop in the crate goes through [`map_indices`]. With the
//! `parallel` feature the work is spread over the rayon pool; without it, or
//! when [`Parallelism::Sequential`] is requested, it runs on the calling thread.
//! Results are always returned in index order.

/// Execution strategy for per-source loops.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Parallelism {
    Sequential,
    #[default]
    Parallel,
}

impl Parallelism {
    /// True when work will actually be distributed over threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Parallelism::Parallel
    }
}

pub(crate) fn map_indices<T, F>(n: usize, par: Parallelism, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if par == Parallelism::Parallel {
            use rayon::prelude::*;
            return (0..n).into_par_iter().map(f).collect();
        }
    }
    let _ = par;
    (0..n).map(f).collect()
}

/// First index (lowest) for which `f` returns `Some`.
pub(crate) fn find_map_first<T, F>(n: usize, par: Parallelism, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if par == Parallelism::Parallel {
            use rayon::prelude::*;
            return (0..n).into_par_iter().find_map_first(f);
        }
    }
    let _ = par;
    (0..n).find_map(f)
}

/// Maps arbitrary items, preserving order.
pub(crate) fn map_items<I, T, F>(items: &[I], par: Parallelism, f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if par == Parallelism::Parallel {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
    }
    let _ = par;
    items.iter().map(f).collect()
}
