//! Two-color urn schemes and their single-draw transition law.
//!
//! All draw probabilities are exact rationals; floating point enters only
//! when a probability is compared against a uniform variate during sampling.

use num::rational::Ratio;
use num::{BigInt, BigRational, One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::UrnError;

/// Ball color, doubling as the walk's step direction (white = +1, blue = -1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Color {
    White,
    Blue,
}

impl Color {
    pub fn displacement(self) -> i64 {
        match self {
            Color::White => 1,
            Color::Blue => -1,
        }
    }
}

/// The three supported drawing schemes.
///
/// `Bernoulli` draws white with a fixed probability and never changes the
/// composition; with p = 1/2 it is the simple symmetric walk driver.
/// `PolyaEggenberger` returns the drawn ball with another of the same color;
/// `Friedman` returns it with a ball of the opposite color.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum UrnScheme {
    Bernoulli { p: BigRational },
    PolyaEggenberger,
    Friedman,
}

impl UrnScheme {
    /// Fixed-coin scheme with white probability p/q.
    pub fn bernoulli(num: i64, den: i64) -> Self {
        UrnScheme::Bernoulli {
            p: Ratio::new(BigInt::from(num), BigInt::from(den)),
        }
    }

    pub fn fair_coin() -> Self {
        Self::bernoulli(1, 2)
    }
}

/// An urn together with its draw history.
///
/// The composition after n draws is a function of the initial counts and the
/// draw counters, so only `(w, b, white_draws, blue_draws)` is stored.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UrnState {
    pub scheme: UrnScheme,
    pub w: u64,
    pub b: u64,
    pub white_draws: u64,
    pub blue_draws: u64,
}

impl UrnState {
    /// Builds a fresh urn with zero draws, validating the scheme's
    /// composition constraints.
    pub fn new(scheme: UrnScheme, w: u64, b: u64) -> Result<Self, UrnError> {
        match &scheme {
            UrnScheme::PolyaEggenberger => {
                if w == 0 || b == 0 {
                    return Err(UrnError::DegeneratePolya { w, b });
                }
            }
            UrnScheme::Friedman => {
                if w + b == 0 {
                    return Err(UrnError::EmptyUrn);
                }
            }
            UrnScheme::Bernoulli { p } => {
                if p < &BigRational::zero() || p > &BigRational::one() {
                    return Err(UrnError::InvalidProbability(p.to_string()));
                }
            }
        }
        Ok(UrnState {
            scheme,
            w,
            b,
            white_draws: 0,
            blue_draws: 0,
        })
    }

    /// Total draws so far.
    pub fn draws(&self) -> u64 {
        self.white_draws + self.blue_draws
    }

    /// Current white-ball count. Pólya reinforces the drawn color, Friedman
    /// the opposite one, Bernoulli never changes the composition.
    pub fn whites(&self) -> u64 {
        match self.scheme {
            UrnScheme::PolyaEggenberger => self.w + self.white_draws,
            UrnScheme::Friedman => self.w + self.blue_draws,
            UrnScheme::Bernoulli { .. } => self.w,
        }
    }

    pub fn blues(&self) -> u64 {
        match self.scheme {
            UrnScheme::PolyaEggenberger => self.b + self.blue_draws,
            UrnScheme::Friedman => self.b + self.white_draws,
            UrnScheme::Bernoulli { .. } => self.b,
        }
    }

    pub fn total_balls(&self) -> u64 {
        match self.scheme {
            UrnScheme::Bernoulli { .. } => self.w + self.b,
            _ => self.draws() + self.w + self.b,
        }
    }

    /// Exact probability that the next draw is white.
    pub fn white_probability(&self) -> BigRational {
        match &self.scheme {
            UrnScheme::Bernoulli { p } => p.clone(),
            _ => Ratio::new(BigInt::from(self.whites()), BigInt::from(self.total_balls())),
        }
    }

    pub fn blue_probability(&self) -> BigRational {
        BigRational::one() - self.white_probability()
    }

    /// Records a draw of the given color, returning the updated state.
    pub fn apply_draw(&self, color: Color) -> UrnState {
        let mut next = self.clone();
        match color {
            Color::White => next.white_draws += 1,
            Color::Blue => next.blue_draws += 1,
        }
        next
    }

    /// Draws one ball: white iff the next uniform variate falls below the
    /// exact white probability. Bit-reproducible given the rng stream.
    pub fn sample_draw<R: Rng + ?Sized>(&self, rng: &mut R) -> (Color, UrnState) {
        let u: f64 = rng.random();
        let p = rational_to_f64(&self.white_probability());
        let color = if u < p { Color::White } else { Color::Blue };
        (color, self.apply_draw(color))
    }

    /// Exact probability of drawing the colors of `seq` in order from this
    /// state.
    pub fn sequence_probability(&self, seq: &[Color]) -> BigRational {
        let mut state = self.clone();
        let mut prob = BigRational::one();
        for &c in seq {
            prob *= match c {
                Color::White => state.white_probability(),
                Color::Blue => state.blue_probability(),
            };
            state = state.apply_draw(c);
        }
        prob
    }
}

/// Lossy conversion for the sampling comparison. Urn probabilities have
/// small numerators and denominators so this stays well within f64 range.
pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    let numer = crate::exact::big_to_f64_log(r.numer());
    let denom = crate::exact::big_to_f64_log(r.denom());
    (numer - denom).exp()
}
