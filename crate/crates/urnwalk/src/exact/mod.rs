//! Exact-arithmetic engine: combinatorial counts, closed-form distributions,
//! dynamic-programming oracles, recurrence series, and log-space evaluation
//! for ranges where exact rationals are impractical.

pub mod asymptotics;
pub mod combinatorics;
pub mod distributions;
pub mod dp;
pub mod series;

pub use asymptotics::{asymptotic_estimate, lower_bound_constant, AsymptoticEntry};
pub use combinatorics::{
    binomial, catalan, eulerian, eulerian_row, factorial, rising_factorial, rising_factorial_int,
    stirling_bracket,
};
pub use distributions::{
    ddim_return_prob, friedman_return_log_series, friedman_return_prob, friedman_white_draw_pmf,
    polya_hitting_pmf, polya_pmf, polya_return_prob,
};
pub use dp::{draw_count_pmf_dp, hitting_pmf_dp};
pub use series::{series_partial_sums, EvalMode, SeriesKind, SeriesRow, SeriesTable, TableValue};

use num::bigint::Sign;
use num::{BigInt, BigUint, ToPrimitive};

/// Natural log of a nonnegative big integer without overflowing f64.
pub fn ln_big_uint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    if bits <= 52 {
        return x.to_f64().unwrap().ln();
    }
    let shift = bits - 52;
    let top = (x >> shift).to_f64().unwrap();
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// ln |x| for a signed big integer.
pub fn big_to_f64_log(x: &BigInt) -> f64 {
    let (sign, mag) = x.clone().into_parts();
    if sign == Sign::NoSign {
        f64::NEG_INFINITY
    } else {
        ln_big_uint(&mag)
    }
}

/// Cumulative table of ln(n!), built once per evaluation.
pub struct LogFactorial {
    table: Vec<f64>,
}

impl LogFactorial {
    pub fn new(n_max: u64) -> Self {
        let mut table = Vec::with_capacity(n_max as usize + 1);
        table.push(0.0);
        let mut acc = 0.0;
        for k in 1..=n_max {
            acc += (k as f64).ln();
            table.push(acc);
        }
        LogFactorial { table }
    }

    pub fn get(&self, n: u64) -> f64 {
        self.table[n as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::One;

    #[test]
    fn ln_big_matches_exact_factorials() {
        let mut f = BigUint::one();
        for n in 2u64..=300 {
            f *= n;
            if n == 10 || n == 100 || n == 300 {
                let lf = LogFactorial::new(n);
                let err = (ln_big_uint(&f) - lf.get(n)).abs();
                assert!(err < 1e-9, "n={n} err={err}");
            }
        }
    }
}
