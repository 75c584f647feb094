//! Order-preserving data-parallel helpers. Without the `parallel` feature
//! every helper runs sequentially and the `parallel` flags are ignored.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub fn enabled() -> bool {
    cfg!(feature = "parallel")
}

/// First `Some` in item order, whichever way it is computed.
pub fn find_map_first<T, R, F>(items: &[T], parallel: bool, f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return items.par_iter().find_map_first(f);
    }
    let _ = parallel;
    items.iter().find_map(f)
}

/// `items.map(f)` with results in item order.
pub fn map<T, R, F>(items: &[T], parallel: bool, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return items.par_iter().map(f).collect();
    }
    let _ = parallel;
    items.iter().map(f).collect()
}

/// Concatenation of `f(item)` over items, in item order.
pub fn flat_map<T, R, F>(items: &[T], parallel: bool, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Vec<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return items.par_iter().flat_map_iter(f).collect();
    }
    let _ = parallel;
    items.iter().flat_map(f).collect()
}
