//! Execution strategy for the data-parallel sweeps.
//!
//! Every sweep in this crate (committee layers, scheme oracles, Farey suites)
//! produces results in the same order regardless of strategy: parallel
//! workers own disjoint, ordered slices of the work and their outputs are
//! concatenated in slice order.

use std::ops::Range;

/// How a sweep distributes its work.
/// Defaults to `Parallel` when the `parallel` feature is on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Single thread, in order.
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    /// Rayon work stealing; output order identical to `Sequential`.
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

/// Resource guards on exhaustive enumerations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Guard {
    /// Refuse work above the documented limit.
    #[default]
    Enforce,
    /// Run regardless of size.
    Override,
}

impl Guard {
    pub fn enforced(self) -> bool {
        self == Guard::Enforce
    }
}

/// Maps `f` over `range`, returning results in index order.
pub fn map_range<R, F>(strategy: Strategy, range: Range<usize>, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    match strategy {
        Strategy::Sequential => range.map(f).collect(),
        #[cfg(feature = "parallel")]
        Strategy::Parallel => {
            use rayon::prelude::*;
            range.into_par_iter().map(f).collect()
        }
    }
}

/// Maps `f` over a slice, returning results in slice order.
pub fn map_slice<T, R, F>(strategy: Strategy, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match strategy {
        Strategy::Sequential => items.iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Strategy::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree_on_order() {
        let seq = map_range(Strategy::Sequential, 0..1000, |i| i * i);
        let def = map_range(Strategy::default(), 0..1000, |i| i * i);
        assert_eq!(seq, def);
        let items: Vec<u32> = (0..257).collect();
        assert_eq!(
            map_slice(Strategy::Sequential, &items, |x| x + 1),
            map_slice(Strategy::default(), &items, |x| x + 1)
        );
    }
}
