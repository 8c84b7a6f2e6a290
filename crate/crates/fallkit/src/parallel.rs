//! Thread-pool drivers. Work is split by `k` or by trial index and the
//! results are reassembled in order, so output never depends on scheduling.

use fallkit_core::reduce::{run_trial, HarnessConfig, HarnessReport};
use fallkit_core::solve::{fall_probe, FallResult, FallSet, Limits};
use fallkit_core::Graph;
use rayon::prelude::*;

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "FALLKIT_THREADS";

/// A pool sized by `FALLKIT_THREADS` when set to a positive integer, else
/// by rayon's default.
pub fn pool() -> rayon::ThreadPool {
    let threads = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&t| t > 0);
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t);
    }
    builder.build().expect("thread pool")
}

/// Every probe of `1..=δ+1`, in order of `k`.
pub fn fall_probes(g: &Graph, limits: &Limits) -> fallkit_core::Result<Vec<FallResult>> {
    let top = g.min_degree() + 1;
    pool().install(|| {
        (1..=top)
            .into_par_iter()
            .map(|k| fall_probe(g, k, limits))
            .collect()
    })
}

/// Same answer as the sequential `fall_set`.
pub fn fall_set(g: &Graph, limits: &Limits) -> fallkit_core::Result<FallSet> {
    let probes = fall_probes(g, limits)?;
    Ok(FallSet {
        members: probes.iter().filter(|r| r.feasible).map(|r| r.k).collect(),
        probed: (1, g.min_degree() + 1),
    })
}

/// Same report as the sequential `equivalence_harness`.
pub fn harness(config: &HarnessConfig) -> HarnessReport {
    let outcomes = pool().install(|| {
        (0..config.trials)
            .into_par_iter()
            .map(|t| run_trial(config, t))
            .collect()
    });
    HarnessReport::from_outcomes(config, outcomes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use fallkit_core::graph::{cycle, petersen, random_gnp};
    use fallkit_core::reduce::{equivalence_harness, Family};
    use fallkit_core::solve;

    #[test]
    fn matches_sequential_fall_set() {
        for g in [cycle(6).unwrap(), petersen(), random_gnp(9, 0.6, 4)] {
            let limits = Limits::default();
            assert_eq!(fall_set(&g, &limits).unwrap(), solve::fall_set(&g, &limits).unwrap());
        }
    }

    #[test]
    fn matches_sequential_harness() {
        let config = HarnessConfig::new(Family::ThreeColFall3, 12, 6, 9);
        assert_eq!(harness(&config), equivalence_harness(&config));
    }
}
