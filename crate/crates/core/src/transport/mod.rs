//! Exact optimal transport between finitely supported measures on a graph.

mod flow;
mod measure;
mod oracle;
mod w1;

use thiserror::Error;

pub use flow::{FlowError, FlowNetwork, FlowSolution};
pub use measure::{lazy_measure, Measure};
pub use oracle::{oracle_w1_enum, ORACLE_MAX_VERTICES};
pub use w1::{
    check_certificate, integerize_potential, w1, w1_anchored, CertificateReport, Potential,
    TransportPlan, Violation, W1Certificate,
};

use crate::graph::GraphError;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransportError {
    #[error("idleness {0} outside [0, 1]")]
    BadIdleness(Rational),
    #[error("vertex {0} has no neighbours to spread mass to")]
    IsolatedVertex(usize),
    #[error("invalid measure: {0}")]
    InvalidMeasure(String),
    #[error("measures are supported on different components")]
    DisconnectedSupports,
    #[error("certificate is not optimal: {0}")]
    NotOptimalInput(String),
    #[error("oracle limited to {limit} vertices, graph has {vertices}")]
    TooLargeForOracle { vertices: usize, limit: usize },
    #[error("scaled masses exceed 128-bit range")]
    Overflow,
    #[error("certificate JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Flow(#[from] FlowError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
