//! Urn-driven random walks.
//!
//! Random walks whose step probabilities come from a two-color urn: the
//! self-reinforcing Pólya-Eggenberger scheme, the mean-reverting Friedman
//! scheme, and a fixed-coin baseline. The crate provides
//!
//! - exact rational draw/transition probabilities ([`urn`]),
//! - d-dimensional walks, trajectory probabilities, and the rotation map
//!   between diagonal and axis-stepping 2-D paths ([`walk`]),
//! - arbitrary-precision closed forms (Pólya distribution, Catalan-counted
//!   first-return pmf, Eulerian-number Friedman pmf), DP oracles, recurrence
//!   series, and asymptotic bounds ([`exact`]),
//! - a seeded, worker-count-independent Monte Carlo replication engine for
//!   hitting times ([`montecarlo`]),
//! - the `urnwalk` binary exposing all of the above ([`cli`]).
//!
//! See the `examples/` directory for one runnable example per capability.

pub mod cli;
pub mod error;
pub mod exact;
pub mod montecarlo;
pub mod urn;
pub mod walk;

pub use error::{SeriesError, UrnError, WalkError};
pub use urn::{Color, UrnScheme, UrnState};
pub use walk::{map_to_simple_2d, Trajectory, WalkState};
