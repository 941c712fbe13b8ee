//! Asymptotic estimates and explicit bound constants for the return
//! probabilities, compared against exact values.

use serde::Serialize;

use super::{big_to_f64_log, LogFactorial};
use crate::urn::UrnScheme;

/// One row of an asymptotic comparison: exact value vs estimate/bound.
#[derive(Debug, Clone, Serialize)]
pub struct AsymptoticEntry {
    pub scheme: String,
    pub w: u64,
    pub b: u64,
    pub n: u64,
    /// C₁ for the Pólya lower bound; absent for Friedman.
    pub bound_constant: Option<f64>,
    /// C₁/n (Pólya) or √(3/(πn)) (Friedman).
    pub estimate: f64,
    /// Exact P(X_{2n} = 0), evaluated in log space.
    pub exact: f64,
    /// exact / estimate.
    pub ratio: f64,
}

/// The explicit constant of the Pólya lower bound P(X_{2n}=0) ≥ C₁/n:
/// C₁ = (K e^{3/4} / 2^{w+b-1}) / (e^{w+b-1} (w+b)^{w+b-1} √(1+(w+b-1)/2))
/// with K = (w+b-1)!/((w-1)!(b-1)!).
pub fn lower_bound_constant(w: u64, b: u64) -> f64 {
    let lf = LogFactorial::new(w + b);
    let ln_k = lf.get(w + b - 1) - lf.get(w - 1) - lf.get(b - 1);
    let a = (w + b - 1) as f64;
    let ln_c1 = ln_k + 0.75
        - a * std::f64::consts::LN_2
        - a
        - a * ((w + b) as f64).ln()
        - 0.5 * (1.0 + a / 2.0).ln();
    ln_c1.exp()
}

/// One comparison row at index n for a 1-D walk.
pub fn asymptotic_estimate(scheme: &UrnScheme, w: u64, b: u64, n: u64) -> AsymptoticEntry {
    assert!(n >= 1);
    match scheme {
        UrnScheme::PolyaEggenberger => {
            let c1 = lower_bound_constant(w, b);
            let lf = LogFactorial::new(2 * n + w + b);
            let exact = super::distributions::polya_return_log(w, b, n, &lf).exp();
            let estimate = c1 / n as f64;
            AsymptoticEntry {
                scheme: "polya".into(),
                w,
                b,
                n,
                bound_constant: Some(c1),
                estimate,
                exact,
                ratio: exact / estimate,
            }
        }
        UrnScheme::Friedman => {
            let estimate = (3.0 / (std::f64::consts::PI * n as f64)).sqrt();
            let exact = if n <= 256 {
                let p = super::distributions::friedman_return_prob(2 * n);
                (big_to_f64_log(p.numer()) - big_to_f64_log(p.denom())).exp()
            } else {
                super::distributions::friedman_return_log_series(n)
                    .last()
                    .copied()
                    .unwrap()
                    .exp()
            };
            AsymptoticEntry {
                scheme: "friedman".into(),
                w,
                b,
                n,
                bound_constant: None,
                estimate,
                exact,
                ratio: exact / estimate,
            }
        }
        UrnScheme::Bernoulli { .. } => {
            // the fair coin has the classical 1/√(πn) behavior
            let lf = LogFactorial::new(2 * n);
            let exact = (lf.get(2 * n) - 2.0 * lf.get(n)
                - 2.0 * n as f64 * std::f64::consts::LN_2)
                .exp();
            let estimate = 1.0 / (std::f64::consts::PI * n as f64).sqrt();
            AsymptoticEntry {
                scheme: "bernoulli".into(),
                w,
                b,
                n,
                bound_constant: None,
                estimate,
                exact,
                ratio: exact / estimate,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn friedman_estimate_value() {
        let e = asymptotic_estimate(&UrnScheme::Friedman, 1, 0, 100);
        assert!((e.estimate - 0.09772).abs() < 5e-6);
    }

    #[test]
    fn polya_symmetric_constant() {
        // K = 1 for (1,1): C₁ = e^{3/4} / (2 · e · 2 · √1.5)
        let c1 = lower_bound_constant(1, 1);
        let expected = (0.75f64).exp() / (2.0 * 1.0f64.exp() * 2.0 * 1.5f64.sqrt());
        assert!((c1 - expected).abs() < 1e-12);
    }

    #[test]
    fn polya_bound_below_exact() {
        // C₁/n ≤ 1/(2n+1) for (1,1)
        for n in [1u64, 10, 1000] {
            let e = asymptotic_estimate(&UrnScheme::PolyaEggenberger, 1, 1, n);
            assert!(e.estimate <= 1.0 / (2.0 * n as f64 + 1.0));
            assert!(e.ratio.is_finite() && e.ratio > 0.0);
        }
    }
}
