//! Execution strategy for the data-parallel sweeps (word-space enumeration,
//! image-set computation, chain generation, verification).
//!
//! With the `parallel` feature (on by default) sweeps run on the rayon global
//! pool; without it only [`Exec::Sequential`] exists. Every sweep collects in
//! input order, so results are identical under either strategy.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

impl Exec {
    pub(crate) fn map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        match self {
            Exec::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().map(f).collect(),
        }
    }

    /// Maps over `0..len` in fixed-size blocks and concatenates block outputs
    /// in index order.
    pub(crate) fn flat_map_range<U, F>(self, len: u64, block: u64, f: F) -> Vec<U>
    where
        U: Send,
        F: Fn(std::ops::Range<u64>) -> Vec<U> + Sync + Send,
    {
        let block = block.max(1);
        let blocks = len.div_ceil(block);
        let run = |b: u64| f(b * block..((b + 1) * block).min(len));
        match self {
            Exec::Sequential => (0..blocks).flat_map(run).collect(),
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                let parts: Vec<Vec<U>> = (0..blocks).into_par_iter().map(run).collect();
                parts.into_iter().flatten().collect()
            }
        }
    }
}
