//! Order-preserving fan-out over scoped threads.

use std::thread;

/// Splits `items` into at most `workers` contiguous chunks, runs `f` on each
/// chunk in its own thread, and returns the per-chunk results in chunk order.
pub fn map_chunks<T, R, F>(items: &[T], workers: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&[T]) -> R + Sync,
{
    let workers = workers.max(1);
    if workers == 1 || items.len() < 2 {
        return vec![f(items)];
    }
    let chunk = items.len().div_ceil(workers);
    thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| {
                let f = &f;
                scope.spawn(move || f(part))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

/// Maps every item, spreading the work over `workers` threads; the output
/// order matches the input order.
pub fn map_ordered<T, R, F>(items: &[T], workers: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    map_chunks(items, workers, |part| part.iter().map(&f).collect::<Vec<R>>())
        .into_iter()
        .flatten()
        .collect()
}

/// Worker count from the machine, at least one.
pub fn available_workers() -> usize {
    thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let items: Vec<u64> = (0..1000).collect();
        let expected: Vec<u64> = items.iter().map(|x| x * x).collect();
        for workers in [1, 2, 3, 7, 64, 5000] {
            assert_eq!(map_ordered(&items, workers, |x| x * x), expected);
        }
        let empty: Vec<u64> = Vec::new();
        assert!(map_ordered(&empty, 4, |x| *x).is_empty());
    }

    #[test]
    fn chunks_cover_input() {
        let items: Vec<usize> = (0..10).collect();
        let sums = map_chunks(&items, 3, |c| c.iter().sum::<usize>());
        assert_eq!(sums.iter().sum::<usize>(), 45);
        assert_eq!(sums.len(), 3);
    }
}
