//! Arbitrary-precision combinatorial counts.

use num::{BigRational, BigUint, One, Zero};

/// Rising factorial ⟨x⟩_s = x(x+1)···(x+s−1), with ⟨x⟩₀ = 1.
pub fn rising_factorial(x: &BigRational, s: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut term = x.clone();
    let one = BigRational::one();
    for _ in 0..s {
        acc *= &term;
        term += &one;
    }
    acc
}

/// Integer rising factorial, kept unsigned for the pmf formulas.
pub fn rising_factorial_int(x: u64, s: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..s {
        acc *= BigUint::from(x + i);
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    rising_factorial_int(1, n)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

/// Catalan number C_n = binom(2n, n)/(n+1).
pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / BigUint::from(n + 1)
}

/// Eulerian numbers A(n, k): permutations of {1..n} with exactly k ascents.
/// Row n has entries k = 0..n-1; out-of-range k gives 0.
pub fn eulerian(n: u64, k: u64) -> BigUint {
    if n == 0 || k >= n {
        return BigUint::zero();
    }
    eulerian_row(n).swap_remove(k as usize)
}

/// Full row (A(n,0), ..., A(n,n-1)) by the standard recurrence
/// A(n,k) = (k+1)A(n-1,k) + (n-k)A(n-1,k-1).
pub fn eulerian_row(n: u64) -> Vec<BigUint> {
    assert!(n >= 1);
    let mut row = vec![BigUint::one()];
    for m in 2..=n {
        let mut next = Vec::with_capacity(m as usize);
        for k in 0..m {
            let mut v = BigUint::zero();
            if (k as usize) < row.len() {
                v += &row[k as usize] * BigUint::from(k + 1);
            }
            if k >= 1 {
                v += &row[k as usize - 1] * BigUint::from(m - k);
            }
            next.push(v);
        }
        row = next;
    }
    row
}

/// Stirling bracket for ln(n!): lower and upper bounds in log space,
/// ln((n/e)^n √(2πn)) and the same plus 1/(12n).
pub fn stirling_bracket(n: u64) -> (f64, f64) {
    assert!(n >= 1);
    let nf = n as f64;
    let lower = nf * (nf.ln() - 1.0) + 0.5 * (2.0 * std::f64::consts::PI * nf).ln();
    (lower, lower + 1.0 / (12.0 * nf))
}
