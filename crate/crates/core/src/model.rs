//! The two-variable LP `max c·x  s.t.  Ax <= b, x >= 0` and its feasible polygon.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Vec2;

/// Numeric slack used across the solve and analysis pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Per-row relative feasibility slack.
    pub feasibility: f64,
    /// Vertices closer than this (coordinate units) are merged.
    pub merge: f64,
    /// Relative slack on objective values when detecting ties.
    pub tie: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { feasibility: 1e-9, merge: 1e-7, tie: 1e-9 }
    }
}

/// `a1·x1 + a2·x2 <= b`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConstraintRow {
    pub a1: f64,
    pub a2: f64,
    pub b: f64,
}

impl ConstraintRow {
    pub const fn new(a1: f64, a2: f64, b: f64) -> Self {
        ConstraintRow { a1, a2, b }
    }

    pub fn normal(&self) -> Vec2 {
        Vec2::new(self.a1, self.a2)
    }

    pub fn lhs(&self, x: Vec2) -> f64 {
        self.a1 * x.x1 + self.a2 * x.x2
    }

    pub fn scale(&self) -> f64 {
        1f64.max(self.a1.abs()).max(self.a2.abs()).max(self.b.abs())
    }

    pub fn satisfied(&self, x: Vec2, tol: f64) -> bool {
        self.lhs(x) <= self.b + tol * self.scale()
    }
}

/// Identifies a half-plane bounding the region: a user row or one of the
/// implicit sign constraints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ActiveRow {
    Constraint(usize),
    /// `x1 >= 0`
    NonNegX1,
    /// `x2 >= 0`
    NonNegX2,
}

impl ActiveRow {
    /// The row in `<=` form, with sign constraints materialized.
    pub fn resolve(self, lp: &LinearProgram2D) -> ConstraintRow {
        match self {
            ActiveRow::Constraint(i) => lp.constraints[i],
            ActiveRow::NonNegX1 => ConstraintRow::new(-1.0, 0.0, 0.0),
            ActiveRow::NonNegX2 => ConstraintRow::new(0.0, -1.0, 0.0),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinearProgram2D {
    pub objective: Vec2,
    pub constraints: Vec<ConstraintRow>,
}

impl LinearProgram2D {
    pub fn new(objective: Vec2, constraints: Vec<ConstraintRow>) -> Self {
        LinearProgram2D { objective, constraints }
    }

    pub fn with_objective(&self, objective: Vec2) -> Self {
        LinearProgram2D { objective, constraints: self.constraints.clone() }
    }

    /// Shape and finiteness checks. The objective may be zero here; solvers
    /// reject that separately.
    pub fn validate(&self) -> Result<()> {
        if self.constraints.is_empty() {
            return Err(Error::EmptyConstraintList);
        }
        if !self.objective.is_finite() {
            return Err(Error::NonFiniteEntry("objective"));
        }
        for (i, row) in self.constraints.iter().enumerate() {
            if !(row.a1.is_finite() && row.a2.is_finite()) {
                return Err(Error::NonFiniteEntry("constraint matrix"));
            }
            if !row.b.is_finite() {
                return Err(Error::NonFiniteEntry("right-hand side"));
            }
            if row.a1 == 0.0 && row.a2 == 0.0 {
                return Err(Error::ZeroRow(i));
            }
        }
        Ok(())
    }

    /// `validate` plus a nonzero objective.
    pub fn validate_for_solve(&self) -> Result<()> {
        self.validate()?;
        if self.objective.is_zero() {
            return Err(Error::ZeroObjective);
        }
        Ok(())
    }

    pub fn evaluate(&self, x: Vec2) -> f64 {
        self.objective.dot(x)
    }

    pub fn is_feasible(&self, x: Vec2, tol: f64) -> bool {
        x.x1 >= -tol && x.x2 >= -tol && self.constraints.iter().all(|r| r.satisfied(x, tol))
    }

    /// User rows followed by the two sign constraints.
    pub fn all_rows(&self) -> impl Iterator<Item = (ActiveRow, ConstraintRow)> + '_ {
        (0..self.constraints.len())
            .map(ActiveRow::Constraint)
            .chain([ActiveRow::NonNegX1, ActiveRow::NonNegX2])
            .map(move |id| (id, id.resolve(self)))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Vertex {
    pub point: Vec2,
    pub active_rows: BTreeSet<ActiveRow>,
}

impl Vertex {
    pub fn new(point: Vec2, active_rows: impl IntoIterator<Item = ActiveRow>) -> Self {
        Vertex { point, active_rows: active_rows.into_iter().collect() }
    }
}

/// The bounded feasible polygon, vertices in counterclockwise order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FeasibleRegion {
    vertices: Vec<Vertex>,
}

impl FeasibleRegion {
    /// Wraps an already convex, counterclockwise vertex list.
    pub fn from_ccw(vertices: Vec<Vertex>) -> Self {
        FeasibleRegion { vertices }
    }

    /// Builds a region from bare points in counterclockwise order.
    pub fn from_points(points: &[Vec2]) -> Self {
        FeasibleRegion::from_ccw(points.iter().map(|&p| Vertex::new(p, [])).collect())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn points(&self) -> impl Iterator<Item = Vec2> + '_ {
        self.vertices.iter().map(|v| v.point)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Index of the vertex at `point`, within `tol` per coordinate.
    pub fn position(&self, point: Vec2, tol: f64) -> Option<usize> {
        self.vertices.iter().position(|v| (v.point.x1 - point.x1).abs() <= tol && (v.point.x2 - point.x2).abs() <= tol)
    }

    pub fn map_points(&self, f: impl Fn(Vec2) -> Vec2) -> FeasibleRegion {
        FeasibleRegion {
            vertices: self
                .vertices
                .iter()
                .map(|v| Vertex { point: f(v.point), active_rows: v.active_rows.clone() })
                .collect(),
        }
    }

    /// Whether every corner turns left by more than `tol` (scaled by the
    /// lengths of the incident edges).
    pub fn is_strictly_convex_ccw(&self, tol: f64) -> bool {
        let n = self.vertices.len();
        n >= 3
            && (0..n).all(|i| {
                let a = self.vertices[i].point;
                let b = self.vertices[(i + 1) % n].point;
                let c = self.vertices[(i + 2) % n].point;
                let (e1, e2) = (b - a, c - b);
                e1.cross(e2) > tol * e1.norm() * e2.norm()
            })
    }

    /// Cyclic-shift-invariant comparison of points within `tol`.
    pub fn approx_eq(&self, other: &FeasibleRegion, tol: f64) -> bool {
        cyclic_match(&self.vertices, &other.vertices, |a, b| {
            (a.point.x1 - b.point.x1).abs() <= tol && (a.point.x2 - b.point.x2).abs() <= tol
        })
    }
}

/// Two regions are equal when one vertex list is a rotation of the other.
impl PartialEq for FeasibleRegion {
    fn eq(&self, other: &Self) -> bool {
        cyclic_match(&self.vertices, &other.vertices, |a, b| a == b)
    }
}

fn cyclic_match<T>(a: &[T], b: &[T], eq: impl Fn(&T, &T) -> bool) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let n = a.len();
    (0..n).any(|shift| (0..n).all(|i| eq(&a[i], &b[(i + shift) % n])))
}
