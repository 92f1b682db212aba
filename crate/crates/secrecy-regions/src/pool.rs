use std::sync::OnceLock;

/// Thread pool for power-split and input-law sweeps.
///
/// `SECRECY_REGIONS_THREADS` caps the worker count; 0 or unset picks the
/// available parallelism. Sweep results are merged in index order, so the
/// output never depends on the thread count.
pub(crate) fn sweep_pool() -> &'static rayon::ThreadPool {
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let threads = std::env::var("SECRECY_REGIONS_THREADS")
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .unwrap_or(0);
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("sweep thread pool")
    })
}
