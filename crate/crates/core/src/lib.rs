//! Exact Ollivier-Ricci curvature on graphs, at every idleness.
//!
//! For a pair `x, y` at distance `delta`, the idleness function
//! `p -> kappa_p(x, y) = 1 - W1(mu_x^p, mu_y^p) / delta` is concave and
//! piecewise linear with at most three pieces. This crate computes it
//! exactly: W1 by min-cost flow with primal and dual certificates, the three
//! line intercepts `c_j` as difference-constraint LPs, and the critical
//! points where the pieces meet. All arithmetic is rational.
//!
//! ```
//! use ricci_idleness::{generators, curvature, rational::rat};
//!
//! let pair = generators::family(1, 1, 1).unwrap();
//! let profile = curvature::idleness_profile(&pair.graph, pair.x, pair.y).unwrap();
//! assert_eq!(curvature::critical_points(&profile), vec![rat(1, 6), rat(2, 7)]);
//! ```

pub mod cli;
pub mod curvature;
pub mod generators;
pub mod graph;
pub mod io;
pub mod rational;
pub mod transport;
pub mod verify;

pub use curvature::{
    idleness_profile, kappa_lly, kappa_p, CurvatureError, IdlenessProfile, PiecewiseLinear,
};
pub use graph::{Graph, GraphError, MarkedPair};
pub use rational::Rational;
pub use transport::{lazy_measure, w1, Measure, W1Certificate};
