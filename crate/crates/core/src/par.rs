//! Order-preserving parallel map with a sequential fallback.
//!
//! With the `parallel` feature, work runs on a rayon pool sized to the
//! requested worker count. Without it, or with one worker, items are mapped
//! on the calling thread. Results come back in input order either way.

use std::num::NonZeroUsize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Workers(NonZeroUsize);

impl Workers {
    pub const ONE: Workers = Workers(NonZeroUsize::MIN);

    pub fn new(n: usize) -> Option<Self> {
        NonZeroUsize::new(n).map(Workers)
    }

    pub fn available() -> Self {
        Workers(std::thread::available_parallelism().unwrap_or(NonZeroUsize::MIN))
    }

    pub fn get(self) -> usize {
        self.0.get()
    }
}

impl Default for Workers {
    fn default() -> Self {
        Workers::available()
    }
}

#[cfg(feature = "parallel")]
pub fn map<T, U, F>(items: &[T], workers: Workers, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;

    if workers.get() == 1 || items.len() < 2 {
        return items.iter().map(f).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(workers.get()).build() {
        Ok(pool) => pool.install(|| items.par_iter().map(f).collect()),
        Err(_) => items.iter().map(f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, U, F>(items: &[T], _workers: Workers, f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = map(&items, Workers::ONE, |x| x * x);
        let par = map(&items, Workers::new(4).unwrap(), |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(seq[999], 999 * 999);
    }

    #[test]
    fn zero_workers_rejected() {
        assert!(Workers::new(0).is_none());
        assert_eq!(Workers::ONE.get(), 1);
    }
}
