//! Data-parallel scans over independent cells (pairs, triples).
//!
//! With the `parallel` feature disabled every strategy runs sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Execution strategy for scans. Results never depend on the choice.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

/// Maps every item and folds the results with an associative `reduce`.
///
/// `reduce` must be associative for the output to match the sequential fold;
/// all callers use max-with-index-tiebreak or concatenation.
pub fn map_reduce<T, R, M, Red, Id>(exec: Exec, items: &[T], map: M, identity: Id, reduce: Red) -> R
where
    T: Sync,
    R: Send,
    M: Fn(&T) -> R + Sync + Send,
    Id: Fn() -> R + Sync + Send,
    Red: Fn(R, R) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => items.par_iter().map(map).reduce(identity, reduce),
        _ => items.iter().map(map).fold(identity(), reduce),
    }
}

/// Order-preserving parallel map.
pub fn map_collect<T, R, M>(exec: Exec, items: &[T], map: M) -> Vec<R>
where
    T: Sync,
    R: Send,
    M: Fn(&T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => items.par_iter().map(map).collect(),
        _ => items.iter().map(map).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let items: Vec<u64> = (0..10_000).collect();
        let seq = map_reduce(Exec::Sequential, &items, |x| x * x % 977, || 0, u64::max);
        let par = map_reduce(Exec::Parallel, &items, |x| x * x % 977, || 0, u64::max);
        assert_eq!(seq, par);
        assert_eq!(
            map_collect(Exec::Sequential, &items, |x| x + 1),
            map_collect(Exec::Parallel, &items, |x| x + 1)
        );
    }
}
