//! Asymptotic estimates against exact values: the Pólya lower-bound constant
//! C1, the Friedman √(3/(πn)) law, and the Stirling bracket for ln(n!).

use urnwalk::exact::{asymptotic_estimate, factorial, ln_big_uint, stirling_bracket};
use urnwalk::urn::UrnScheme;

fn main() {
    println!("Pólya lower bound P(X_2n=0) >= C1/n:");
    for (w, b) in [(1u64, 1u64), (2, 2), (3, 1)] {
        let e = asymptotic_estimate(&UrnScheme::PolyaEggenberger, w, b, 1000);
        println!(
            "  (w,b)=({w},{b}): C1 = {:.5}, C1/n = {:.3e}, exact = {:.3e}, ratio = {:.3}",
            e.bound_constant.unwrap(),
            e.estimate,
            e.exact,
            e.ratio
        );
    }

    println!("Friedman return probability vs sqrt(3/(pi n)):");
    for n in [10u64, 100, 1000] {
        let e = asymptotic_estimate(&UrnScheme::Friedman, 1, 0, n);
        println!(
            "  n={n}: exact = {:.5e}, estimate = {:.5e}, ratio = {:.4}",
            e.exact, e.estimate, e.ratio
        );
    }

    println!("Stirling bracket for ln(n!):");
    for n in [1u64, 10, 100] {
        let (lo, hi) = stirling_bracket(n);
        let exact = ln_big_uint(&factorial(n));
        println!("  n={n}: {lo:.6} <= {exact:.6} <= {hi:.6}");
    }
}
