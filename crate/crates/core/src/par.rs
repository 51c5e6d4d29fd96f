//! Tiny indirection over rayon so every data-parallel loop in the crate has
//! a sequential twin. With the `parallel` feature the mapped closures run on
//! the rayon pool; without it the same code runs on one thread. Results are
//! collected in input order either way, so output is schedule-independent.

#[cfg(feature = "parallel")]
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

/// Always-sequential twin, kept available under every feature combination
/// so benchmarks can compare the two paths in a single build.
pub fn map_collect_seq<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}
