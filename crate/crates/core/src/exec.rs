//! Execution strategy for batch work.
//!
//! Every batch entry point takes an [`Execution`]. `Parallel` uses rayon when
//! the `parallel` feature is enabled and silently degrades to `Sequential`
//! otherwise, so results never depend on the feature set.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether work will actually be spread over threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    /// Order-preserving map over owned items.
    pub fn map<T, R, F>(self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        {
            if self == Execution::Parallel {
                return items.into_par_iter().map(f).collect();
            }
        }
        items.into_iter().map(f).collect()
    }

    /// Order-preserving map over borrowed items.
    pub fn map_ref<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        {
            if self == Execution::Parallel {
                return items.par_iter().map(f).collect();
            }
        }
        items.iter().map(f).collect()
    }
}
