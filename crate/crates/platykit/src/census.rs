//! Parallel census driver over the sharded generator.

use std::time::Instant;

use platykit_core::generation::{generate_shard, merge_shards, GenError, GenResult, GenSpec, Shard};
use rayon::prelude::*;

/// Shards per worker; more shards than workers evens out the load.
const SHARDS_PER_JOB: usize = 8;

#[derive(Debug, Clone)]
pub struct CensusRun {
    pub result: GenResult,
    pub wall_seconds: f64,
    pub jobs: usize,
    pub shards: usize,
}

/// Depth (edge count) at which the search tree is split between shards.
pub fn split_depth(spec: &GenSpec) -> usize {
    spec.order
}

/// Runs `spec` on `jobs` threads. The output list does not depend on
/// `jobs`; the statistics may.
pub fn run_census(spec: &GenSpec, jobs: usize) -> Result<CensusRun, GenError> {
    spec.validate()?;
    let jobs = jobs.max(1);
    let start = Instant::now();
    let shards = if jobs == 1 { 1 } else { jobs * SHARDS_PER_JOB };
    let depth = if shards == 1 { 0 } else { split_depth(spec) };
    let pool =
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool with a positive thread count");
    let parts: Result<Vec<GenResult>, GenError> = pool.install(|| {
        (0..shards)
            .into_par_iter()
            .map(|index| generate_shard(spec, Shard { index, count: shards, split_depth: depth }))
            .collect()
    });
    let result = merge_shards(spec, parts?);
    Ok(CensusRun { result, wall_seconds: start.elapsed().as_secs_f64(), jobs, shards })
}

/// Default worker count: the available parallelism.
pub fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}
