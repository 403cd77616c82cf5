//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) the helpers dispatch to rayon when
//! [`Execution::Parallel`] is requested and the workload is large enough.
//! Without the feature every call runs sequentially. Results are identical
//! either way: reductions preserve input order, and "first" queries return
//! the lowest index.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Below this many work items the parallel path is not worth the overhead.
pub const PARALLEL_THRESHOLD: usize = 32;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// True if this build and this request will actually use worker threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    #[cfg_attr(not(feature = "parallel"), allow(dead_code))]
    fn use_pool(self, len: usize) -> bool {
        self.is_parallel() && len >= PARALLEL_THRESHOLD
    }
}

/// `(0..len).map(f).collect()`, possibly in parallel.
pub fn map_indices<T, F>(len: usize, exec: Execution, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.use_pool(len) {
        return (0..len).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..len).map(f).collect()
}

/// The `Some` result with the lowest index, possibly searched in parallel.
pub fn find_first<T, F>(len: usize, exec: Execution, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.use_pool(len) {
        return (0..len).into_par_iter().find_map_first(f);
    }
    let _ = exec;
    (0..len).find_map(f)
}

/// Folds contiguous index blocks and reduces the block results in order.
///
/// `fold` receives a half-open index range and must process it in
/// increasing order. `reduce(left, right)` always sees the earlier block on
/// the left.
pub fn fold_blocks<T, F, R>(len: usize, block: usize, exec: Execution, fold: F, reduce: R) -> Option<T>
where
    T: Send,
    F: Fn(std::ops::Range<usize>) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    let block = block.max(1);
    let blocks = len.div_ceil(block);
    let range = move |b: usize| b * block..((b + 1) * block).min(len);
    #[cfg(feature = "parallel")]
    if exec.is_parallel() && blocks > 1 {
        return (0..blocks).into_par_iter().map(range).map(&fold).reduce_with(&reduce);
    }
    let _ = exec;
    (0..blocks).map(range).map(&fold).reduce(&reduce)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn helpers_agree_across_modes() {
        for exec in [Execution::Sequential, Execution::Parallel] {
            let squares = map_indices(100, exec, |i| i * i);
            assert_eq!(squares[7], 49);
            assert_eq!(squares.len(), 100);
            assert_eq!(find_first(1000, exec, |i| (i % 97 == 96).then_some(i)), Some(96));
            assert_eq!(find_first(10, exec, |_| None::<usize>), None);
            let concat = fold_blocks(
                50,
                7,
                exec,
                |r| r.collect::<Vec<_>>(),
                |mut a, b| {
                    a.extend(b);
                    a
                },
            )
            .unwrap();
            assert_eq!(concat, (0..50).collect::<Vec<_>>());
        }
    }
}
