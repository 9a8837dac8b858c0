//! Data-parallel helpers. With the `parallel` feature these dispatch to rayon,
//! otherwise they are plain sequential loops with identical results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Evaluates `f` on every index of `0..len`, preserving order.
pub fn map_indices<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..len).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..len).map(f).collect()
    }
}

/// Maps over a slice, preserving order.
pub fn map_slice<S, T, F>(items: &[S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Sums `f(i)` over `0..len`. Used for the inner sums of sequential
/// recurrences, so short ranges stay on the calling thread.
pub fn sum_indices<T, F>(len: usize, min_parallel: usize, f: F) -> T
where
    T: Send + std::iter::Sum<T>,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if len >= min_parallel {
            return (0..len).into_par_iter().with_min_len(min_parallel / 4 + 1).map(f).sum();
        }
    }
    let _ = min_parallel;
    (0..len).map(f).sum()
}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
