//! Data-parallel loops that fall back to plain iteration when the
//! `parallel` feature is off or the caller asks for sequential execution.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Ordered map.
pub(crate) fn map<T, R, F>(items: Vec<T>, parallel: bool, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return items.into_par_iter().map(f).collect();
    }
    let _ = parallel;
    items.into_iter().map(f).collect()
}

pub(crate) fn any<T, F>(items: Vec<T>, parallel: bool, f: F) -> bool
where
    T: Send,
    F: Fn(T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return items.into_par_iter().any(f);
    }
    let _ = parallel;
    items.into_iter().any(f)
}

/// Element-wise sum of fixed-length count vectors.
pub(crate) fn sum_counts<T, F>(items: Vec<T>, width: usize, parallel: bool, f: F) -> Vec<u64>
where
    T: Send,
    F: Fn(T) -> Vec<u64> + Sync + Send,
{
    let add = |mut a: Vec<u64>, b: Vec<u64>| {
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
        a
    };
    #[cfg(feature = "parallel")]
    if parallel {
        return items.into_par_iter().map(f).reduce(|| vec![0; width], add);
    }
    let _ = parallel;
    items.into_iter().map(f).fold(vec![0; width], add)
}
