//! Closed-form distributions for the urn-driven walks, in exact-rational and
//! log-space form.

use num::{BigInt, BigRational, BigUint, One, Zero};

use super::combinatorics::{
    binomial, catalan, eulerian_row, factorial, rising_factorial_int,
};
use super::{ln_big_uint, LogFactorial};
use crate::urn::UrnScheme;

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Pólya distribution: P(W_n = k) = binom(n,k) ⟨w⟩_k ⟨b⟩_{n-k} / ⟨w+b⟩_n.
pub fn polya_pmf(w: u64, b: u64, n: u64, k: i64) -> BigRational {
    assert!(w > 0 && b > 0, "Pólya requires w > 0 and b > 0");
    if k < 0 || k as u64 > n {
        return BigRational::zero();
    }
    let k = k as u64;
    let num = binomial(n, k) * rising_factorial_int(w, k) * rising_factorial_int(b, n - k);
    ratio(num, rising_factorial_int(w + b, n))
}

/// P(X_m = 0) for the 1-D Pólya walk: zero at odd m, the Pólya pmf at the
/// balanced count otherwise.
pub fn polya_return_prob(w: u64, b: u64, m: u64) -> BigRational {
    if m % 2 != 0 {
        return BigRational::zero();
    }
    let n = m / 2;
    polya_pmf(w, b, 2 * n, n as i64)
}

/// First-return-time pmf for the 1-D Pólya walk:
/// P(H₀ = 2n) = 2 C_{n-1} ⟨w⟩_n ⟨b⟩_n / ⟨w+b⟩_{2n}.
///
/// C_{n-1} counts the first-passage draw orders starting with a white draw;
/// the factor 2 covers sequences starting with blue. By exchangeability every
/// such sequence has the same probability.
pub fn polya_hitting_pmf(w: u64, b: u64, m: u64) -> BigRational {
    assert!(m >= 1);
    if m % 2 != 0 {
        return BigRational::zero();
    }
    let n = m / 2;
    let num = BigUint::from(2u32)
        * catalan(n - 1)
        * rising_factorial_int(w, n)
        * rising_factorial_int(b, n);
    ratio(num, rising_factorial_int(w + b, 2 * n))
}

/// Friedman urn starting from one white ball: P(W_n = k) = A(n, n-k)/n!
/// for 1 ≤ k ≤ n, zero otherwise.
pub fn friedman_white_draw_pmf(n: u64, k: i64) -> BigRational {
    assert!(n >= 1);
    if k < 1 || k as u64 > n {
        return BigRational::zero();
    }
    let k = k as u64;
    let row = eulerian_row(n);
    // A(n, n-k); row indices run 0..n-1 so k = n maps to A(n, 0)
    let a = row[(n - k) as usize].clone();
    ratio(a, factorial(n))
}

/// P(X_m = 0) for the 1-D Friedman walk started from one white ball:
/// A(2n, n)/(2n)! at m = 2n, zero at odd m.
pub fn friedman_return_prob(m: u64) -> BigRational {
    if m == 0 {
        return BigRational::one();
    }
    if m % 2 != 0 {
        return BigRational::zero();
    }
    friedman_white_draw_pmf(m, (m / 2) as i64)
}

/// Product of per-dimension return probabilities; dimensions are independent.
pub fn ddim_return_prob(scheme: &UrnScheme, w: u64, b: u64, d: u32, m: u64) -> BigRational {
    let one_dim = return_prob_1d(scheme, w, b, m);
    let mut acc = BigRational::one();
    for _ in 0..d {
        acc *= &one_dim;
    }
    acc
}

/// 1-D return probability dispatched by scheme.
pub fn return_prob_1d(scheme: &UrnScheme, w: u64, b: u64, m: u64) -> BigRational {
    match scheme {
        UrnScheme::PolyaEggenberger => polya_return_prob(w, b, m),
        UrnScheme::Friedman => friedman_return_prob(m),
        UrnScheme::Bernoulli { p } => {
            if m % 2 != 0 {
                return BigRational::zero();
            }
            let n = m / 2;
            let q = BigRational::one() - p;
            let mut acc = BigRational::from(BigInt::from(binomial(2 * n, n)));
            for _ in 0..n {
                acc *= p;
                acc *= &q;
            }
            acc
        }
    }
}

/// ln P(X_{2n} = 0) for the Pólya walk, evaluated from log-factorials.
pub fn polya_return_log(w: u64, b: u64, n: u64, lf: &LogFactorial) -> f64 {
    let ln_k = lf.get(w + b - 1) - lf.get(w - 1) - lf.get(b - 1);
    ln_k + lf.get(n + w - 1) + lf.get(n + b - 1) - lf.get(2 * n + w + b - 1) + lf.get(2 * n)
        - 2.0 * lf.get(n)
}

/// ln P(H₀ = 2n) for the Pólya walk.
pub fn polya_hitting_log(w: u64, b: u64, n: u64, lf: &LogFactorial) -> f64 {
    assert!(n >= 1);
    let ln_catalan = lf.get(2 * n - 2) - 2.0 * lf.get(n - 1) - (n as f64).ln();
    let ln_rising = |x: u64, s: u64| lf.get(x + s - 1) - lf.get(x - 1);
    (2.0f64).ln() + ln_catalan + ln_rising(w, n) + ln_rising(b, n)
        - ln_rising(w + b, 2 * n)
}

/// ln P(X_{2n} = 0) for the Friedman walk, for every n in 1..=n_max at once.
///
/// Runs the Eulerian row recurrence on values normalized by n!, so entries
/// stay in [0, 1]: B(n,k) = ((k+1)B(n-1,k) + (n-k)B(n-1,k-1))/n. The
/// return probability at 2n is B(2n, n). Edge entries underflow to zero for
/// large n; they are orders of magnitude below the central entries and do
/// not move the result at the tolerances used here.
pub fn friedman_return_log_series(n_max: u64) -> Vec<f64> {
    let mut out = Vec::with_capacity(n_max as usize);
    let mut row = vec![1.0f64];
    for m in 2..=(2 * n_max) {
        let mut next = vec![0.0f64; m as usize];
        for k in 0..m as usize {
            let mut v = 0.0;
            if k < row.len() {
                v += (k as f64 + 1.0) * row[k];
            }
            if k >= 1 {
                v += (m - k as u64) as f64 * row[k - 1];
            }
            next[k] = v / m as f64;
        }
        row = next;
        if m % 2 == 0 {
            out.push(row[(m / 2) as usize].ln());
        }
    }
    out
}

/// Exact ln P(X_{2n} = 0) for Friedman via the exact Eulerian row; used to
/// cross-check the float recurrence.
pub fn friedman_return_log_exact(n: u64) -> f64 {
    let row = eulerian_row(2 * n);
    ln_big_uint(&row[n as usize]) - ln_big_uint(&factorial(2 * n))
}
