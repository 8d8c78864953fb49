//! Irreversible threshold cascades and dynamic monopolies in graphs:
//! cascade simulation, resistant-subgraph peeling, closed-form bounds,
//! explicit dynamo constructions, an exact minimum-dynamo solver, and
//! random-threshold (homogeneous society) experiments.

pub mod bounds;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod numeric;
pub mod propagation;
pub mod resistant;
pub mod solver;
pub mod stochastic;

pub use error::{Error, Result};
pub use graph::{Graph, ThresholdAssignment, VertexSet};

/// Exact rational scalar used by all normative bound arithmetic.
pub type Rational = num_rational::Ratio<i64>;

/// Threshold model over the exact rational lane.
pub type RationalThresholdModel = stochastic::ThresholdModel<Rational>;
