//! Recurrence-series diagnostics: indexed tables of exact or log-space terms
//! with running partial sums. Divergence of the return series is the
//! recurrence criterion; partial sums of first-passage series probe the kind
//! of recurrence.

use num::{BigRational, ToPrimitive, Zero};
use serde::Serialize;

use super::distributions::{
    friedman_return_log_series, polya_hitting_log, polya_hitting_pmf, polya_return_log,
    return_prob_1d,
};
use super::dp::hitting_pmf_dp;
use super::LogFactorial;
use crate::error::SeriesError;
use crate::urn::UrnScheme;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    /// Σ P(X_{2n} = 0): diverges iff the state is recurrent.
    ReturnSeries,
    /// Σ 2n · P(H₀ = 2n): diverges for null recurrence.
    ExpectedHitting,
    /// Σ P(H₀ = 2n): total first-return mass.
    HittingMass,
}

impl SeriesKind {
    pub fn name(&self) -> &'static str {
        match self {
            SeriesKind::ReturnSeries => "return_series",
            SeriesKind::ExpectedHitting => "expected_hitting",
            SeriesKind::HittingMass => "hitting_mass",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EvalMode {
    Exact,
    LogSpace,
}

/// A table cell: exact rational or float, per evaluation mode.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum TableValue {
    Exact(#[serde(serialize_with = "serialize_rational")] BigRational),
    Float(f64),
}

fn serialize_rational<S: serde::Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl TableValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            TableValue::Exact(r) => {
                let ln = crate::exact::big_to_f64_log(r.numer())
                    - crate::exact::big_to_f64_log(r.denom());
                if r.is_zero() {
                    0.0
                } else {
                    ln.exp()
                }
            }
            TableValue::Float(f) => *f,
        }
    }

    /// Exact values render as "p/q", floats as decimals.
    pub fn render(&self, decimal_digits: Option<usize>) -> String {
        match (self, decimal_digits) {
            (TableValue::Exact(r), None) => r.to_string(),
            (v, Some(d)) => format!("{:.*e}", d, v.to_f64()),
            (TableValue::Float(f), None) => format!("{f}"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesRow {
    pub n: u64,
    pub term: TableValue,
    pub partial_sum: TableValue,
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesTable {
    pub kind: SeriesKind,
    pub scheme: String,
    pub w: u64,
    pub b: u64,
    pub d: u32,
    pub mode: EvalMode,
    pub rows: Vec<SeriesRow>,
}

impl SeriesTable {
    pub fn partial_sum_at(&self, n: u64) -> f64 {
        self.rows[n as usize - 1].partial_sum.to_f64()
    }

    pub fn term_at(&self, n: u64) -> f64 {
        self.rows[n as usize - 1].term.to_f64()
    }
}

pub fn scheme_name(scheme: &UrnScheme) -> String {
    match scheme {
        UrnScheme::Bernoulli { p } => format!("bernoulli({p})"),
        UrnScheme::PolyaEggenberger => "polya".into(),
        UrnScheme::Friedman => "friedman".into(),
    }
}

/// Builds the table of terms and running partial sums for n = 1..=n_max.
pub fn series_partial_sums(
    kind: SeriesKind,
    scheme: &UrnScheme,
    w: u64,
    b: u64,
    d: u32,
    n_max: u64,
    mode: EvalMode,
) -> Result<SeriesTable, SeriesError> {
    assert!(n_max >= 1 && d >= 1);
    let unsupported = |reason: &str| SeriesError::UnsupportedCombination {
        kind: kind.name().into(),
        scheme: scheme_name(scheme),
        reason: reason.into(),
    };

    if kind != SeriesKind::ReturnSeries {
        if d != 1 {
            return Err(unsupported("first-passage series are defined for d = 1 only"));
        }
        match scheme {
            UrnScheme::Bernoulli { .. } => {
                return Err(unsupported(
                    "no first-passage evaluation path for the fixed-coin scheme",
                ))
            }
            UrnScheme::Friedman => {
                if mode == EvalMode::LogSpace {
                    return Err(unsupported(
                        "Friedman first-passage probabilities come from the exact DP; use exact mode",
                    ));
                }
            }
            UrnScheme::PolyaEggenberger => {}
        }
    }

    let rows = match mode {
        EvalMode::Exact => exact_rows(kind, scheme, w, b, d, n_max),
        EvalMode::LogSpace => log_rows(kind, scheme, w, b, d, n_max),
    };

    Ok(SeriesTable {
        kind,
        scheme: scheme_name(scheme),
        w,
        b,
        d,
        mode,
        rows,
    })
}

fn exact_rows(
    kind: SeriesKind,
    scheme: &UrnScheme,
    w: u64,
    b: u64,
    d: u32,
    n_max: u64,
) -> Vec<SeriesRow> {
    let hitting_dp = match (kind, scheme) {
        (SeriesKind::ReturnSeries, _) | (_, UrnScheme::PolyaEggenberger) => None,
        _ => Some(hitting_pmf_dp(scheme, w, b, n_max)),
    };
    let mut sum = BigRational::zero();
    let mut rows = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let term = match kind {
            SeriesKind::ReturnSeries => {
                let p = return_prob_1d(scheme, w, b, 2 * n);
                let mut acc = p.clone();
                for _ in 1..d {
                    acc *= &p;
                }
                acc
            }
            SeriesKind::HittingMass | SeriesKind::ExpectedHitting => {
                let p = match &hitting_dp {
                    Some(dp) => dp.get(&(2 * n)).cloned().unwrap_or_else(BigRational::zero),
                    None => polya_hitting_pmf(w, b, 2 * n),
                };
                if kind == SeriesKind::ExpectedHitting {
                    p * BigRational::from_integer((2 * n).into())
                } else {
                    p
                }
            }
        };
        sum += &term;
        rows.push(SeriesRow {
            n,
            term: TableValue::Exact(term),
            partial_sum: TableValue::Exact(sum.clone()),
        });
    }
    rows
}

fn log_rows(
    kind: SeriesKind,
    scheme: &UrnScheme,
    w: u64,
    b: u64,
    d: u32,
    n_max: u64,
) -> Vec<SeriesRow> {
    let lf = LogFactorial::new(2 * n_max + w + b);
    let friedman_logs = match scheme {
        UrnScheme::Friedman => Some(friedman_return_log_series(n_max)),
        _ => None,
    };
    let mut sum = 0.0f64;
    let mut rows = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let log_term = match kind {
            SeriesKind::ReturnSeries => {
                let one_dim = match scheme {
                    UrnScheme::PolyaEggenberger => polya_return_log(w, b, n, &lf),
                    UrnScheme::Friedman => friedman_logs.as_ref().unwrap()[n as usize - 1],
                    UrnScheme::Bernoulli { p } => {
                        let pf = p.to_f64().unwrap();
                        lf.get(2 * n) - 2.0 * lf.get(n)
                            + n as f64 * (pf.ln() + (1.0 - pf).ln())
                    }
                };
                d as f64 * one_dim
            }
            SeriesKind::HittingMass => polya_hitting_log(w, b, n, &lf),
            SeriesKind::ExpectedHitting => {
                polya_hitting_log(w, b, n, &lf) + ((2 * n) as f64).ln()
            }
        };
        let term = log_term.exp();
        sum += term;
        rows.push(SeriesRow {
            n,
            term: TableValue::Float(term),
            partial_sum: TableValue::Float(sum),
        });
    }
    rows
}
