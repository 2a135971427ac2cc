//! Data-parallel helpers. With the `parallel` feature these go through rayon;
//! without it they are plain sequential loops with identical results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// `items.iter().map(f).collect()`, in parallel when enabled. Output order
/// always matches input order.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
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

/// Maps over `0..n`.
pub fn map_range<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Sum of `f` over `items`; integer addition keeps the result independent of
/// the reduction schedule.
pub fn sum<T, F>(items: &[T], f: F) -> u64
where
    T: Sync,
    F: Fn(&T) -> u64 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).sum()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).sum()
    }
}

/// Whether the crate was built with the rayon backend.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
