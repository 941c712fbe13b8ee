//! d-dimensional walks driven by independent urns.
//!
//! Every coordinate moves at every step (diagonal moves): +1 on a white draw
//! from that coordinate's urn, -1 on a blue draw. `map_to_simple_2d` rotates
//! a 2-D diagonal path onto the axis-stepping simple walk it corresponds to.

use num::{BigRational, One};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::WalkError;
use crate::urn::{Color, UrnScheme, UrnState};

#[derive(Debug, Clone, PartialEq)]
pub struct WalkState {
    pub urns: Vec<UrnState>,
    pub position: Vec<i64>,
    pub time: u64,
}

impl WalkState {
    /// One urn per dimension; the walk starts at the origin at time 0.
    pub fn new(dims: Vec<(UrnScheme, u64, u64)>) -> Result<Self, WalkError> {
        if dims.is_empty() {
            return Err(WalkError::ZeroDimensions);
        }
        let urns = dims
            .into_iter()
            .map(|(scheme, w, b)| UrnState::new(scheme, w, b))
            .collect::<Result<Vec<_>, _>>()?;
        let d = urns.len();
        Ok(WalkState {
            urns,
            position: vec![0; d],
            time: 0,
        })
    }

    pub fn dims(&self) -> usize {
        self.urns.len()
    }

    pub fn at_origin(&self) -> bool {
        self.position.iter().all(|&x| x == 0)
    }

    /// Advances one time step: each coordinate draws from its own urn with
    /// an independent variate.
    pub fn step<R: Rng + ?Sized>(&self, rng: &mut R) -> WalkState {
        let mut next = self.clone();
        for i in 0..next.urns.len() {
            let (color, urn) = next.urns[i].sample_draw(rng);
            next.urns[i] = urn;
            next.position[i] += color.displacement();
        }
        next.time += 1;
        next
    }

    /// Advances by a known color vector instead of sampling.
    pub fn apply_colors(&self, colors: &[Color]) -> Result<WalkState, WalkError> {
        if colors.len() != self.dims() {
            return Err(WalkError::DimensionMismatch {
                step: self.time as usize,
                got: colors.len(),
                expected: self.dims(),
            });
        }
        let mut next = self.clone();
        for (i, &c) in colors.iter().enumerate() {
            next.urns[i] = next.urns[i].apply_draw(c);
            next.position[i] += c.displacement();
        }
        next.time += 1;
        Ok(next)
    }
}

/// A walk recorded as the colors drawn, one vector of d colors per step.
/// Positions are always re-derived by replay.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trajectory {
    pub dims: Vec<(UrnScheme, u64, u64)>,
    pub steps: Vec<Vec<Color>>,
}

impl Trajectory {
    pub fn new(dims: Vec<(UrnScheme, u64, u64)>, steps: Vec<Vec<Color>>) -> Self {
        Trajectory { dims, steps }
    }

    /// Replays the trajectory, returning every visited state (including the
    /// initial one).
    pub fn replay(&self) -> Result<Vec<WalkState>, WalkError> {
        let mut state = WalkState::new(self.dims.clone())?;
        let mut states = vec![state.clone()];
        for colors in &self.steps {
            state = state.apply_colors(colors)?;
            states.push(state.clone());
        }
        Ok(states)
    }

    /// Exact probability of this exact draw sequence: the product of the
    /// per-draw probabilities along the replay.
    pub fn probability(&self) -> Result<BigRational, WalkError> {
        let mut state = WalkState::new(self.dims.clone())?;
        let mut prob = BigRational::one();
        for (step, colors) in self.steps.iter().enumerate() {
            if colors.len() != state.dims() {
                return Err(WalkError::DimensionMismatch {
                    step,
                    got: colors.len(),
                    expected: state.dims(),
                });
            }
            for (i, &c) in colors.iter().enumerate() {
                prob *= match c {
                    Color::White => state.urns[i].white_probability(),
                    Color::Blue => state.urns[i].blue_probability(),
                };
            }
            state = state.apply_colors(colors)?;
        }
        Ok(prob)
    }

    /// Positions visited, origin first.
    pub fn positions(&self) -> Result<Vec<Vec<i64>>, WalkError> {
        Ok(self.replay()?.into_iter().map(|s| s.position).collect())
    }
}

/// Rotates a diagonal-stepping 2-D path onto the corresponding axis-stepping
/// simple-walk path via (x, y) -> ((x+y)/2, (y-x)/2).
///
/// Consecutive input positions must differ by (±1, ±1); each output step then
/// changes exactly one coordinate by one unit. The map is invertible on its
/// image, so origin visits are preserved both ways.
pub fn map_to_simple_2d(path: &[(i64, i64)]) -> Result<Vec<(i64, i64)>, WalkError> {
    if path.is_empty() {
        return Err(WalkError::EmptyPath);
    }
    for (step, pair) in path.windows(2).enumerate() {
        let dx = pair[1].0 - pair[0].0;
        let dy = pair[1].1 - pair[0].1;
        if dx.abs() != 1 || dy.abs() != 1 {
            return Err(WalkError::InvalidDiagonalStep { step, dx, dy });
        }
    }
    // Interior points of a diagonal path from the origin satisfy x ≡ y (mod 2),
    // so the halves are exact. A lone point is mapped through the same formula.
    for (step, &(x, y)) in path.iter().enumerate() {
        if (x + y) % 2 != 0 {
            return Err(WalkError::InvalidDiagonalStep {
                step,
                dx: x,
                dy: y,
            });
        }
    }
    Ok(path
        .iter()
        .map(|&(x, y)| ((x + y) / 2, (y - x) / 2))
        .collect())
}
