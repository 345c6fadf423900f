//! Ollivier-Ricci curvature at every idleness, and the exact three-line
//! structure of the idleness function for pairs at distance at least 2.

mod cj;
mod kappa;
mod profile;
mod sampling;

use thiserror::Error;

pub use cj::{potential_sup_cj, CjSolution};
pub use kappa::{
    bonnet_myers_diameter_bound, kappa_lly, kappa_p, kappa_p_certificate, optimal_potential_gap,
    product_formula_rhs,
};
pub use profile::{
    check_critical_bounds, critical_points, evaluate_profile, idleness_profile, BoundCheck,
    BoundReport, IdlenessProfile, Piece, PiecewiseLinear,
};
pub use sampling::{candidate_grid, reconstruct_by_sampling};

use crate::graph::GraphError;
use crate::rational::Rational;
use crate::transport::TransportError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurvatureError {
    #[error("curvature needs two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("vertices {0} and {1} are not connected")]
    Disconnected(usize, usize),
    #[error("pair is at distance {delta}; the three-line profile needs distance >= 2")]
    DistanceTooSmall { delta: u32 },
    #[error("pin phi(x) = {j} is infeasible at distance {delta}")]
    InfeasiblePin { j: i64, delta: u32 },
    #[error("idleness {0} out of range")]
    BadIdleness(Rational),
    #[error("profile invariant violated: {0}")]
    InvariantViolated(String),
    #[error("reconstructed idleness function has {pieces} linear pieces")]
    MoreThanThreePieces { pieces: usize },
    #[error("reconstructed idleness function is not concave")]
    NotConcave,
    #[error("curvature bound must be positive, got {0}")]
    NonPositiveKappa(Rational),
    #[error("product formula needs a positive total distance")]
    BothDistancesZero,
    #[error(transparent)]
    Transport(#[from] TransportError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
