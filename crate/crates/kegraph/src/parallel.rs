use std::num::NonZeroUsize;

use kegraph_core::{Vertex, VertexMap};
use rayon::prelude::*;

/// A [`VertexMap`] backed by a dedicated rayon pool. Each vertex writes its
/// own output slot, so results do not depend on the worker count.
pub struct Parallel {
    pool: rayon::ThreadPool,
}

impl Parallel {
    pub fn new(workers: NonZeroUsize) -> Self {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers.get())
            .thread_name(|i| format!("kegraph-worker-{i}"))
            .build()
            .expect("thread pool");
        Parallel { pool }
    }

    pub fn workers(&self) -> usize {
        self.pool.current_num_threads()
    }
}

impl VertexMap for Parallel {
    fn map<T, F>(&self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(Vertex) -> T + Sync + Send,
    {
        self.pool.install(|| (0..n).into_par_iter().map(f).collect())
    }
}
