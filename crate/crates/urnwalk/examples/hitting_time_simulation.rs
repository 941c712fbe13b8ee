//! Seeded Monte Carlo replication of the Friedman hitting-time experiment:
//! 10^4 replicas of the 1-D walk started from one white ball, first return
//! to the origin recorded per replica.

use urnwalk::montecarlo::{empirical_return_frequency, run_replications, SimConfig};
use urnwalk::urn::UrnScheme;

fn main() {
    let cfg = SimConfig::uniform(UrnScheme::Friedman, 1, 1, 0, 10_000, 1_000_000, 42);
    let (_, stats) = run_replications(&cfg).unwrap();
    println!(
        "Friedman d=1, {} replicas, seed {}: mean H0 = {:.3} (median {}, q99 {}), censored {}",
        stats.replicas, stats.seed, stats.mean, stats.median, stats.q99, stats.censored
    );
    println!(
        "empirical P(H0=2) = {:.4} (exact 1/2), P(H0=4) = {:.4} (exact 1/6)",
        stats.pmf.get(&2).copied().unwrap_or(0.0),
        stats.pmf.get(&4).copied().unwrap_or(0.0),
    );

    // occupancy, not first returns: fraction of replicas at the origin
    let occ = empirical_return_frequency(&cfg, 8).unwrap();
    println!("origin occupancy: {occ:?}");

    // null-recurrent Pólya walk: censoring is a first-class outcome
    let polya = SimConfig::uniform(UrnScheme::PolyaEggenberger, 1, 1, 1, 10_000, 10_000, 42);
    let (_, pstats) = run_replications(&polya).unwrap();
    println!(
        "Pólya d=1, cap {}: {} hits, {} censored, mean over hits {:.3}",
        pstats.cap, pstats.hits, pstats.censored, pstats.mean
    );
}
