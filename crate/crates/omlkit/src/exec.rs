//! Sequential/parallel execution strategies for the exhaustive scans.
//!
//! Every scan in the crate is written against [`Runner`] so that the
//! parallel and sequential code paths share one implementation. Parallel
//! runs must return bit-identical results: `first` reduces with `min`, so
//! the lexicographically least witness wins regardless of scheduling, and
//! `retain` preserves index order.

pub(crate) trait Runner {
    /// Lexicographically least witness produced over `0..n`, or `None`.
    ///
    /// `f(x)` must itself return the least witness for slice `x`; witnesses
    /// are expected to order with `x` as the most significant component.
    fn first<W, F>(&self, n: usize, f: F) -> Option<W>
    where
        W: Ord + Send,
        F: Fn(usize) -> Option<W> + Sync + Send;

    /// Indices in `0..n` satisfying `pred`, ascending.
    fn retain<F>(&self, n: usize, pred: F) -> Vec<usize>
    where
        F: Fn(usize) -> bool + Sync + Send;

    /// Applies `f` to every index, collecting results in index order.
    fn map<T, F>(&self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send;
}

pub(crate) struct Seq;

impl Runner for Seq {
    fn first<W, F>(&self, n: usize, f: F) -> Option<W>
    where
        W: Ord + Send,
        F: Fn(usize) -> Option<W> + Sync + Send,
    {
        (0..n).find_map(f)
    }

    fn retain<F>(&self, n: usize, pred: F) -> Vec<usize>
    where
        F: Fn(usize) -> bool + Sync + Send,
    {
        (0..n).filter(|&x| pred(x)).collect()
    }

    fn map<T, F>(&self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        (0..n).map(f).collect()
    }
}

#[cfg(feature = "parallel")]
pub(crate) struct Par;

#[cfg(feature = "parallel")]
impl Runner for Par {
    fn first<W, F>(&self, n: usize, f: F) -> Option<W>
    where
        W: Ord + Send,
        F: Fn(usize) -> Option<W> + Sync + Send,
    {
        use rayon::prelude::*;
        (0..n).into_par_iter().filter_map(f).min()
    }

    fn retain<F>(&self, n: usize, pred: F) -> Vec<usize>
    where
        F: Fn(usize) -> bool + Sync + Send,
    {
        use rayon::prelude::*;
        (0..n).into_par_iter().filter(|&x| pred(x)).collect()
    }

    fn map<T, F>(&self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        use rayon::prelude::*;
        (0..n).into_par_iter().map(f).collect()
    }
}
