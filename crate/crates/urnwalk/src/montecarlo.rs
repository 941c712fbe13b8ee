//! Seeded, reproducible, parallel replication of the hitting-time experiment.
//!
//! Each replica draws from its own counter-derived ChaCha stream, so results
//! are byte-identical regardless of how replicas are scheduled across
//! workers. Possibly-infinite hitting times are censored at a step cap and
//! the censored count is a first-class output.

use std::collections::BTreeMap;
use std::io::Write;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::WalkError;
use crate::urn::UrnScheme;
use crate::walk::WalkState;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimConfig {
    pub scheme: UrnScheme,
    pub d: u32,
    /// Initial (w, b) per dimension.
    pub starts: Vec<(u64, u64)>,
    pub replicas: u64,
    /// Maximum steps per replica before censoring.
    pub cap: u64,
    pub seed: u64,
}

impl SimConfig {
    /// Same scheme and start in every dimension.
    pub fn uniform(
        scheme: UrnScheme,
        d: u32,
        w: u64,
        b: u64,
        replicas: u64,
        cap: u64,
        seed: u64,
    ) -> Self {
        assert!(replicas >= 1 && cap >= 2 && d >= 1);
        SimConfig {
            scheme,
            d,
            starts: vec![(w, b); d as usize],
            replicas,
            cap,
            seed,
        }
    }

    fn initial_walk(&self) -> Result<WalkState, WalkError> {
        WalkState::new(
            self.starts
                .iter()
                .map(|&(w, b)| (self.scheme.clone(), w, b))
                .collect(),
        )
    }

    /// Per-replica generator: one seed, one stream index per replica.
    /// Distinct streams of the counter-based generator are independent, so
    /// scheduling order cannot change any replica's draws.
    pub fn replica_rng(&self, replica: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(replica);
        rng
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "outcome", content = "time")]
pub enum Outcome {
    /// First time every coordinate is simultaneously zero; always even, ≥ 2.
    Hit(u64),
    /// No return within the cap.
    Censored(u64),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HittingSample {
    pub replica: u64,
    #[serde(flatten)]
    pub outcome: Outcome,
}

#[derive(Debug, Clone, Serialize)]
pub struct SampleStats {
    pub replicas: u64,
    pub hits: u64,
    pub censored: u64,
    /// Mean of hit times, over uncensored replicas only.
    pub mean: f64,
    pub variance: f64,
    pub median: f64,
    pub q90: f64,
    pub q99: f64,
    pub seed: u64,
    pub cap: u64,
    /// Fraction of replicas hitting at each time.
    #[serde(skip)]
    pub pmf: BTreeMap<u64, f64>,
}

/// Runs one replica to the first return to the origin, or to the cap.
pub fn simulate_hitting_time(
    start: &WalkState,
    cap: u64,
    rng: &mut ChaCha8Rng,
) -> Outcome {
    let mut walk = start.clone();
    for t in 1..=cap {
        walk = walk.step(rng);
        if walk.at_origin() {
            return Outcome::Hit(t);
        }
    }
    Outcome::Censored(cap)
}

/// Runs all replicas in parallel and aggregates. Results are merged by
/// replica index, so the sample list does not depend on worker count.
pub fn run_replications(cfg: &SimConfig) -> Result<(Vec<HittingSample>, SampleStats), WalkError> {
    let start = cfg.initial_walk()?;
    let samples: Vec<HittingSample> = (0..cfg.replicas)
        .into_par_iter()
        .map(|r| {
            let mut rng = cfg.replica_rng(r);
            HittingSample {
                replica: r,
                outcome: simulate_hitting_time(&start, cfg.cap, &mut rng),
            }
        })
        .collect();
    let stats = aggregate(cfg, &samples);
    Ok((samples, stats))
}

/// Same as `run_replications` but pinned to a worker pool of the given size.
/// The output values must not depend on `workers`.
pub fn run_replications_with_workers(
    cfg: &SimConfig,
    workers: usize,
) -> Result<(Vec<HittingSample>, SampleStats), WalkError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("worker pool");
    pool.install(|| run_replications(cfg))
}

fn aggregate(cfg: &SimConfig, samples: &[HittingSample]) -> SampleStats {
    let mut hit_times: Vec<u64> = samples
        .iter()
        .filter_map(|s| match s.outcome {
            Outcome::Hit(t) => Some(t),
            Outcome::Censored(_) => None,
        })
        .collect();
    hit_times.sort_unstable();
    let hits = hit_times.len() as u64;
    let censored = cfg.replicas - hits;
    let mean = if hits > 0 {
        hit_times.iter().sum::<u64>() as f64 / hits as f64
    } else {
        f64::NAN
    };
    let variance = if hits > 1 {
        hit_times
            .iter()
            .map(|&t| (t as f64 - mean).powi(2))
            .sum::<f64>()
            / (hits as f64 - 1.0)
    } else {
        f64::NAN
    };
    let quantile = |q: f64| -> f64 {
        if hit_times.is_empty() {
            return f64::NAN;
        }
        let rank = ((q * hits as f64).ceil() as usize).clamp(1, hit_times.len());
        hit_times[rank - 1] as f64
    };
    let mut pmf = BTreeMap::new();
    for &t in &hit_times {
        *pmf.entry(t).or_insert(0.0) += 1.0;
    }
    for v in pmf.values_mut() {
        *v /= cfg.replicas as f64;
    }
    SampleStats {
        replicas: cfg.replicas,
        hits,
        censored,
        mean,
        variance,
        median: quantile(0.5),
        q90: quantile(0.9),
        q99: quantile(0.99),
        seed: cfg.seed,
        cap: cfg.cap,
        pmf,
    }
}

/// Occupancy frequencies: fraction of replicas at the origin at each even
/// time up to `horizon` (all visits, not first returns).
pub fn empirical_return_frequency(
    cfg: &SimConfig,
    horizon: u64,
) -> Result<BTreeMap<u64, f64>, WalkError> {
    assert!(horizon <= cfg.cap);
    let start = cfg.initial_walk()?;
    let slots = (horizon / 2) as usize;
    let counts = (0..cfg.replicas)
        .into_par_iter()
        .map(|r| {
            let mut rng = cfg.replica_rng(r);
            let mut walk = start.clone();
            let mut local = vec![0u64; slots];
            for t in 1..=horizon {
                walk = walk.step(&mut rng);
                if t % 2 == 0 && walk.at_origin() {
                    local[(t / 2 - 1) as usize] = 1;
                }
            }
            local
        })
        .reduce(
            || vec![0u64; slots],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    Ok(counts
        .into_iter()
        .enumerate()
        .map(|(i, c)| (2 * (i as u64 + 1), c as f64 / cfg.replicas as f64))
        .collect())
}

/// Sample dump: CSV with columns replica, outcome, time.
pub fn write_samples_csv<W: Write>(samples: &[HittingSample], out: W) -> csv::Result<()> {
    let mut wtr = csv::Writer::from_writer(out);
    wtr.write_record(["replica", "outcome", "time"])?;
    for s in samples {
        let (label, time) = match s.outcome {
            Outcome::Hit(t) => ("hit", t),
            Outcome::Censored(c) => ("censored", c),
        };
        wtr.write_record([s.replica.to_string(), label.to_string(), time.to_string()])?;
    }
    wtr.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn friedman_cfg(replicas: u64, cap: u64, seed: u64) -> SimConfig {
        SimConfig::uniform(UrnScheme::Friedman, 1, 1, 0, replicas, cap, seed)
    }

    #[test]
    fn hit_times_even_and_at_least_two() {
        let cfg = friedman_cfg(500, 10_000, 17);
        let (samples, stats) = run_replications(&cfg).unwrap();
        assert_eq!(stats.hits + stats.censored, cfg.replicas);
        for s in &samples {
            if let Outcome::Hit(t) = s.outcome {
                assert!(t >= 2 && t % 2 == 0);
                assert!(t <= cfg.cap);
            }
        }
    }

    #[test]
    fn determinism_same_config() {
        let cfg = friedman_cfg(300, 1_000, 99);
        let a = run_replications(&cfg).unwrap();
        let b = run_replications(&cfg).unwrap();
        assert_eq!(a.0, b.0);
    }

    #[test]
    fn determinism_across_worker_counts() {
        let cfg = friedman_cfg(400, 1_000, 7);
        let one = run_replications_with_workers(&cfg, 1).unwrap();
        let four = run_replications_with_workers(&cfg, 4).unwrap();
        assert_eq!(one.0, four.0);
    }

    #[test]
    fn half_of_friedman_replicas_hit_at_two() {
        // exact P(H₀=2) = 1/2 from the first-passage DP
        let cfg = friedman_cfg(10_000, 10_000, 424242);
        let (_, stats) = run_replications(&cfg).unwrap();
        let freq = stats.pmf.get(&2).copied().unwrap_or(0.0);
        let se = (0.5f64 * 0.5 / cfg.replicas as f64).sqrt();
        assert!((freq - 0.5).abs() < 3.0 * se, "freq={freq}");
    }

    #[test]
    fn censoring_monotone_in_cap() {
        let seed = 5150;
        let small = run_replications(&friedman_cfg(300, 100, seed)).unwrap().1;
        let large = run_replications(&friedman_cfg(300, 10_000, seed)).unwrap().1;
        assert!(large.hits >= small.hits);
        // shared prefix: every hit under the small cap recurs identically
        let s1 = run_replications(&friedman_cfg(300, 100, seed)).unwrap().0;
        let s2 = run_replications(&friedman_cfg(300, 10_000, seed)).unwrap().0;
        for (a, b) in s1.iter().zip(&s2) {
            if let Outcome::Hit(t) = a.outcome {
                assert_eq!(b.outcome, Outcome::Hit(t));
            }
        }
    }

    #[test]
    fn occupancy_matches_exact_friedman() {
        let cfg = friedman_cfg(10_000, 100, 2024);
        let freq = empirical_return_frequency(&cfg, 10).unwrap();
        let se = |p: f64| (p * (1.0 - p) / cfg.replicas as f64).sqrt();
        assert!((freq[&2] - 0.5).abs() < 3.0 * se(0.5));
        let p4 = 11.0 / 24.0;
        assert!((freq[&4] - p4).abs() < 3.0 * se(p4));
    }

    #[test]
    fn csv_dump_shape() {
        let cfg = friedman_cfg(5, 100, 1);
        let (samples, _) = run_replications(&cfg).unwrap();
        let mut buf = Vec::new();
        write_samples_csv(&samples, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("replica,outcome,time"));
        assert_eq!(text.lines().count(), 6);
    }
}
