//! Exact return probabilities and first-return pmfs, cross-checked against
//! the DP oracles.

use urnwalk::exact::{
    draw_count_pmf_dp, hitting_pmf_dp, polya_hitting_pmf, polya_return_prob,
    series_partial_sums, EvalMode, SeriesKind,
};
use urnwalk::urn::UrnScheme;

fn main() {
    println!("1-D Pólya(1,1): P(X_2n = 0) = 1/(2n+1)");
    for n in 1..=5u64 {
        println!("  n={n}: {}", polya_return_prob(1, 1, 2 * n));
    }

    println!("first-return pmf, closed form vs first-passage DP:");
    let dp = hitting_pmf_dp(&UrnScheme::PolyaEggenberger, 1, 1, 5);
    for n in 1..=5u64 {
        println!(
            "  P(H0 = {:>2}) = {:>7}  dp: {}",
            2 * n,
            polya_hitting_pmf(1, 1, 2 * n).to_string(),
            dp[&(2 * n)]
        );
    }

    println!("Friedman(1,0) white-draw distribution at n = 4 (draw-count DP):");
    for (k, p) in draw_count_pmf_dp(&UrnScheme::Friedman, 1, 0, 4) {
        println!("  P(W_4 = {k}) = {p}");
    }

    let table = series_partial_sums(
        SeriesKind::ExpectedHitting,
        &UrnScheme::PolyaEggenberger,
        1,
        1,
        1,
        6,
        EvalMode::Exact,
    )
    .unwrap();
    println!("partial sums of 2n·P(H0=2n) (diverges: null recurrence):");
    for row in &table.rows {
        println!("  N={}: {}", row.n, row.partial_sum.render(None));
    }
}
