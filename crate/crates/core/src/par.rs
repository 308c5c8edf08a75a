//! Index-range loops with a rayon backend and a sequential fallback.
//!
//! Every helper returns results in index order regardless of backend.

use crate::options::Exec;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// `(0..n).map(f).collect()`.
pub fn map_range<T, F>(exec: Exec, n: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => (0..n).into_par_iter().map(f).collect(),
        _ => (0..n).map(f).collect(),
    }
}

/// Smallest index in `0..n` satisfying `pred`.
pub fn find_first<F>(exec: Exec, n: u64, pred: F) -> Option<u64>
where
    F: Fn(u64) -> bool + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => (0..n).into_par_iter().find_first(|&i| pred(i)),
        _ => (0..n).find(|&i| pred(i)),
    }
}

/// `items.filter(pred)`, preserving order.
pub fn filter<T, F>(exec: Exec, items: Vec<T>, pred: F) -> Vec<T>
where
    T: Send + Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => items.into_par_iter().filter(|t| pred(t)).collect(),
        _ => items.into_iter().filter(|t| pred(t)).collect(),
    }
}

/// `items.iter().map(f)`, preserving order.
pub fn map_slice<T, U, F>(exec: Exec, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => items.par_iter().map(f).collect(),
        _ => items.iter().map(f).collect(),
    }
}
