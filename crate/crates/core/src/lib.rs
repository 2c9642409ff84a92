//! Planar linear programming and objective-direction sensitivity.
//!
//! The crate solves `max c·x` subject to `Ax <= b`, `x >= 0` with two
//! decision variables, and answers the post-optimality question: for which
//! gradient directions does the optimal vertex stay optimal? The answer is
//! an open cone of angles bounded by the outward normals of the two edges
//! incident to the optimum.
//!
//! Modules, bottom-up:
//!
//! - [`geometry`]: vectors, angles, rotations, projections onto lines.
//! - [`model`]: the LP data model, objective evaluation and feasibility.
//! - [`solver`]: vertex enumeration, two-phase simplex, recession check.
//! - [`distance`]: the distance-to-level-line form of the objective.
//! - [`normalize`]: rotation and translation of a problem to a
//!   nonnegative objective.
//! - [`sensitivity`]: the stable cone, value shifts under gradient rotation.
//! - [`oracle`]: brute-force angle sweeps certifying the analytic cone.
//! - [`cli`]: file format, reports, SVG rendering and subcommand drivers.
//!
//! Data-parallel loops (angle sweeps, batch solves) run on rayon when the
//! `parallel` feature is enabled and fall back to sequential iteration
//! otherwise. See [`exec`].

pub mod cli;
pub mod distance;
mod error;
pub mod exec;
pub mod geometry;
pub mod model;
pub mod normalize;
pub mod oracle;
pub mod sensitivity;
pub mod solver;

pub use error::{Error, Result};
pub use geometry::{Angle, LineThroughOrigin, PolarVector, Rotation, Vec2};
pub use model::{ActiveRow, ConstraintRow, FeasibleRegion, LinearProgram2D, Tolerances, Vertex};
pub use sensitivity::{analyze, AngleInterval, SensitivityReport, ValueShift};
pub use solver::{solve_enumeration, solve_simplex, Solution};
