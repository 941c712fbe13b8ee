//! The recurrence/transience dichotomy read off the return-series partial
//! sums: divergence means recurrence, a Cauchy tail means transience.

use urnwalk::exact::{series_partial_sums, EvalMode, SeriesKind};
use urnwalk::urn::UrnScheme;

fn main() {
    let cases = [
        (UrnScheme::PolyaEggenberger, 1u64, 1u64, 1u32, "diverges (null recurrent)"),
        (UrnScheme::PolyaEggenberger, 1, 1, 2, "converges (transient)"),
        (UrnScheme::Friedman, 1, 0, 1, "diverges (conjectured positive recurrent)"),
        (UrnScheme::Friedman, 1, 0, 2, "diverges (recurrent, type undetermined)"),
        (UrnScheme::Friedman, 1, 0, 3, "converges (transient)"),
    ];
    println!("scheme        d   sum@10^2     sum@10^4     growth");
    for (scheme, w, b, d, verdict) in cases {
        let t = series_partial_sums(
            SeriesKind::ReturnSeries,
            &scheme,
            w,
            b,
            d,
            10_000,
            EvalMode::LogSpace,
        )
        .unwrap();
        let early = t.partial_sum_at(100);
        let late = t.partial_sum_at(10_000);
        println!(
            "{:<12} {:>2}   {:>10.4}   {:>10.4}   {:>8.4}   {}",
            t.scheme, d,
            early,
            late,
            late - early,
            verdict
        );
    }
}
