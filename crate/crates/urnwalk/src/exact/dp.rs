//! Exact dynamic-programming oracles, independent of the closed forms they
//! validate. Both exploit that the urn composition after t draws is a
//! function of (t, white-draw count) alone.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Zero};

use crate::urn::UrnScheme;

/// Exact white probability at a DP node: t draws done, k of them white.
fn white_prob_at(scheme: &UrnScheme, w: u64, b: u64, t: u64, k: u64) -> BigRational {
    match scheme {
        UrnScheme::Bernoulli { p } => p.clone(),
        UrnScheme::PolyaEggenberger => BigRational::new(
            BigInt::from(w + k),
            BigInt::from(t + w + b),
        ),
        UrnScheme::Friedman => BigRational::new(
            BigInt::from(w + (t - k)),
            BigInt::from(t + w + b),
        ),
    }
}

/// Exact distribution of the white-draw count W_n by forward DP over
/// (step, white-draw count). Sums to 1 exactly.
pub fn draw_count_pmf_dp(scheme: &UrnScheme, w: u64, b: u64, n: u64) -> BTreeMap<u64, BigRational> {
    let mut probs = vec![BigRational::one()];
    for t in 0..n {
        let mut next = vec![BigRational::zero(); t as usize + 2];
        for (k, p) in probs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let pw = white_prob_at(scheme, w, b, t, k as u64);
            let pb = BigRational::one() - &pw;
            next[k + 1] += p * pw;
            next[k] += p * pb;
        }
        probs = next;
    }
    probs
        .into_iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .map(|(k, p)| (k as u64, p))
        .collect()
}

/// Exact first-passage pmf P(H₀ = 2n) for 2n ≤ 2N by forward DP over
/// (step, position), with the origin absorbing after step 0. The position x
/// at step t determines the white-draw count (t+x)/2, hence the urn state.
pub fn hitting_pmf_dp(
    scheme: &UrnScheme,
    w: u64,
    b: u64,
    n_max: u64,
) -> BTreeMap<u64, BigRational> {
    assert!(n_max >= 1);
    let mut pmf = BTreeMap::new();
    // alive[i] = P(walk at position x = -t + 2i at step t, no return yet)
    let mut alive = vec![BigRational::one()];
    for t in 0..(2 * n_max) {
        let mut next = vec![BigRational::zero(); t as usize + 2];
        let mut hit_mass = BigRational::zero();
        for (i, p) in alive.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let x = -(t as i64) + 2 * i as i64;
            if t > 0 && x == 0 {
                continue; // absorbed earlier
            }
            let k = i as u64; // white draws so far
            let pw = white_prob_at(scheme, w, b, t, k);
            let pb = BigRational::one() - &pw;
            let up = p * pw;
            let down = p * pb;
            if x + 1 == 0 {
                hit_mass += &up;
            }
            next[i + 1] += up;
            if x - 1 == 0 {
                hit_mass += &down;
            }
            next[i] += down;
        }
        alive = next;
        if (t + 1) % 2 == 0 && !hit_mass.is_zero() {
            pmf.insert(t + 1, hit_mass);
        }
    }
    pmf
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::distributions::{
        friedman_return_prob, friedman_white_draw_pmf, polya_hitting_pmf, polya_pmf,
    };
    use crate::urn::{Color, UrnState};
    use num::rational::Ratio;

    fn r(n: i64, d: i64) -> BigRational {
        Ratio::new(BigInt::from(n), BigInt::from(d))
    }

    /// Brute-force oracle: enumerate every color sequence of length n.
    fn enumerate_draw_counts(
        scheme: &UrnScheme,
        w: u64,
        b: u64,
        n: u64,
    ) -> BTreeMap<u64, BigRational> {
        let start = UrnState::new(scheme.clone(), w, b).unwrap();
        let mut out: BTreeMap<u64, BigRational> = BTreeMap::new();
        for mask in 0u64..(1 << n) {
            let seq: Vec<Color> = (0..n)
                .map(|i| if mask >> i & 1 == 1 { Color::White } else { Color::Blue })
                .collect();
            let p = start.sequence_probability(&seq);
            if p.is_zero() {
                continue;
            }
            let k = seq.iter().filter(|c| **c == Color::White).count() as u64;
            *out.entry(k).or_insert_with(BigRational::zero) += p;
        }
        out
    }

    #[test]
    fn dp_examples() {
        let polya = draw_count_pmf_dp(&UrnScheme::PolyaEggenberger, 1, 1, 2);
        assert_eq!(polya[&0], r(1, 3));
        assert_eq!(polya[&1], r(1, 3));
        assert_eq!(polya[&2], r(1, 3));

        let fried = draw_count_pmf_dp(&UrnScheme::Friedman, 1, 0, 2);
        assert_eq!(fried.len(), 2);
        assert_eq!(fried[&1], r(1, 2));
        assert_eq!(fried[&2], r(1, 2));

        let trivial = draw_count_pmf_dp(&UrnScheme::Friedman, 1, 0, 0);
        assert_eq!(trivial[&0], BigRational::one());
    }

    #[test]
    fn dp_matches_brute_force_enumeration() {
        let schemes = [
            UrnScheme::fair_coin(),
            UrnScheme::PolyaEggenberger,
            UrnScheme::Friedman,
        ];
        for scheme in &schemes {
            for n in 0..=8u64 {
                let dp = draw_count_pmf_dp(scheme, 2, 1, n);
                let brute = enumerate_draw_counts(scheme, 2, 1, n);
                assert_eq!(dp, brute, "scheme={scheme:?} n={n}");
            }
        }
    }

    #[test]
    fn dp_matches_closed_forms() {
        for w in 1..=3u64 {
            for b in 1..=3u64 {
                for n in 0..=12u64 {
                    let dp = draw_count_pmf_dp(&UrnScheme::PolyaEggenberger, w, b, n);
                    let mut total = BigRational::zero();
                    for k in 0..=n {
                        let closed = polya_pmf(w, b, n, k as i64);
                        let dp_val = dp.get(&k).cloned().unwrap_or_else(BigRational::zero);
                        assert_eq!(closed, dp_val, "w={w} b={b} n={n} k={k}");
                        total += closed;
                    }
                    assert_eq!(total, BigRational::one());
                }
            }
        }
        for n in 1..=12u64 {
            let dp = draw_count_pmf_dp(&UrnScheme::Friedman, 1, 0, n);
            for k in 0..=n {
                let closed = friedman_white_draw_pmf(n, k as i64);
                let dp_val = dp.get(&k).cloned().unwrap_or_else(BigRational::zero);
                assert_eq!(closed, dp_val, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn friedman_eulerian_consistency() {
        for n in 1..=12u64 {
            let dp = draw_count_pmf_dp(&UrnScheme::Friedman, 1, 0, 2 * n);
            assert_eq!(friedman_return_prob(2 * n), dp[&n]);
        }
    }

    /// First-passage brute force: enumerate sequences, track first return.
    fn enumerate_hitting(
        scheme: &UrnScheme,
        w: u64,
        b: u64,
        n_max: u64,
    ) -> BTreeMap<u64, BigRational> {
        let start = UrnState::new(scheme.clone(), w, b).unwrap();
        let steps = 2 * n_max;
        let mut out: BTreeMap<u64, BigRational> = BTreeMap::new();
        for mask in 0u64..(1 << steps) {
            let mut pos = 0i64;
            let mut first_hit = None;
            let mut seq = Vec::with_capacity(steps as usize);
            for i in 0..steps {
                let white = mask >> i & 1 == 1;
                pos += if white { 1 } else { -1 };
                seq.push(if white { Color::White } else { Color::Blue });
                if pos == 0 {
                    first_hit = Some(i + 1);
                    break;
                }
            }
            if let Some(t) = first_hit {
                // count each prefix once: skip masks with bits beyond the hit
                if t < steps && mask >> t != 0 {
                    continue;
                }
                seq.truncate(t as usize);
                let p = start.sequence_probability(&seq);
                if !p.is_zero() {
                    *out.entry(t).or_insert_with(BigRational::zero) += p;
                }
            }
        }
        out
    }

    #[test]
    fn hitting_dp_examples() {
        let polya = hitting_pmf_dp(&UrnScheme::PolyaEggenberger, 1, 1, 2);
        assert_eq!(polya[&2], r(1, 3));
        assert_eq!(polya[&4], r(1, 15));

        let fried = hitting_pmf_dp(&UrnScheme::Friedman, 1, 0, 2);
        assert_eq!(fried[&2], r(1, 2));
        assert_eq!(fried[&4], r(1, 6));
    }

    #[test]
    fn hitting_dp_matches_brute_force() {
        let schemes = [
            UrnScheme::fair_coin(),
            UrnScheme::PolyaEggenberger,
            UrnScheme::Friedman,
        ];
        for scheme in &schemes {
            for (w, b) in [(1u64, 1u64), (2, 1), (1, 3)] {
                let dp = hitting_pmf_dp(scheme, w, b, 5);
                let brute = enumerate_hitting(scheme, w, b, 5);
                assert_eq!(dp, brute, "scheme={scheme:?} w={w} b={b}");
            }
        }
    }

    #[test]
    fn hitting_dp_matches_polya_closed_form() {
        for w in 1..=3u64 {
            for b in 1..=3u64 {
                let dp = hitting_pmf_dp(&UrnScheme::PolyaEggenberger, w, b, 12);
                let mut partial = BigRational::zero();
                for n in 1..=12u64 {
                    let closed = polya_hitting_pmf(w, b, 2 * n);
                    assert_eq!(dp[&(2 * n)], closed, "w={w} b={b} n={n}");
                    partial += &dp[&(2 * n)];
                    assert!(partial <= BigRational::one());
                }
            }
        }
    }
}
