//! Execution-mode switch: the search/verification sweeps can run
//! sequentially or fan out over a rayon pool when the `parallel`
//! feature is enabled. Results are order-preserving either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for ExecMode {
    #[cfg(feature = "parallel")]
    fn default() -> Self {
        ExecMode::Parallel
    }
    #[cfg(not(feature = "parallel"))]
    fn default() -> Self {
        ExecMode::Sequential
    }
}

impl ExecMode {
    /// Pick a mode from the POSETKIT_THREADS convention: 1 means
    /// sequential, anything else (including unset / 0 = auto) means the
    /// parallel pool when compiled in.
    pub fn from_env() -> Self {
        match std::env::var("POSETKIT_THREADS").ok().as_deref() {
            Some("1") => ExecMode::Sequential,
            _ => ExecMode::default(),
        }
    }

    /// Map `f` over `items`, preserving input order in the output.
    pub fn map_vec<T, U, F>(self, items: Vec<T>, f: F) -> Vec<U>
    where
        T: Send,
        U: Send,
        F: Fn(T) -> U + Sync + Send,
    {
        match self {
            ExecMode::Sequential => items.into_iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            ExecMode::Parallel => items.into_par_iter().map(f).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_vec_preserves_order() {
        let input: Vec<u32> = (0..1000).collect();
        let seq = ExecMode::Sequential.map_vec(input.clone(), |x| x * x);
        assert_eq!(seq, input.iter().map(|x| x * x).collect::<Vec<_>>());
        #[cfg(feature = "parallel")]
        {
            let par = ExecMode::Parallel.map_vec(input, |x| x * x);
            assert_eq!(seq, par);
        }
    }
}
