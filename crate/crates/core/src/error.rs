use thiserror::Error;

use crate::geometry::{Angle, Vec2};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("zero vector has no direction")]
    ZeroVector,
    #[error("objective vector is zero")]
    ZeroObjective,
    #[error("constraint list is empty")]
    EmptyConstraintList,
    #[error("non-finite entry in {0}")]
    NonFiniteEntry(&'static str),
    #[error("constraint row {0} has zero coefficients")]
    ZeroRow(usize),
    #[error("feasible region is empty")]
    Infeasible,
    #[error("feasible region is unbounded along ({}, {})", .0.x1, .0.x2)]
    UnboundedRegion(Vec2),
    #[error("objective is unbounded above")]
    Unbounded,
    #[error("feasible region has fewer than three distinct vertices")]
    DegenerateRegion,
    #[error("vertex is not a member of the region")]
    VertexNotInRegion,
    #[error("objective has a negative component; normalize the problem first")]
    NegativeCoefficient,
    #[error("point lies on the objective level line through the origin")]
    PointOnLine,
    #[error("alpha must be strictly positive, got {0}")]
    NonPositiveAlpha(f64),
    #[error("adjacent vertices coincide")]
    CoincidentVertices,
    #[error("corner is reflex; the region is not convex at this vertex")]
    ReflexVertex,
    #[error("optimum is attained on an edge; stable directions collapse to {} deg", .phi.degrees())]
    DegenerateOptimum { tied: Vec<Vec2>, phi: Angle },
    #[error("rotation {} deg lies outside the stable cone", .0.degrees())]
    RotationOutsideStableCone(Angle),
    #[error("vertex is never the strict maximizer over the sweep")]
    VertexNeverOptimal,
    #[error("region has no vertices")]
    EmptyRegion,
    #[error("invalid sweep parameters: {0}")]
    InvalidSweep(&'static str),
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("missing `maximize:` line")]
    MissingObjective,
    #[error("no constraint rows")]
    NoConstraints,
}
