//! The objective seen as a signed distance to its zero level line.
//!
//! For gradient `c`, the line `d0 = {x : <c, x> = 0}` splits the plane in
//! two open half-planes. On each side `f(x) / dist(x, d0)` is the constant
//! `±|c|`, so for `c >= 0` over a region in the first quadrant, maximizing
//! `f` is the same as maximizing distance to `d0`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{distance_to_line, LineThroughOrigin, Vec2};
use crate::model::{FeasibleRegion, Tolerances, Vertex};
use crate::solver::argmax_with_ties;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HalfPlaneSide {
    /// `<c, x> > 0`
    Plus,
    /// `<c, x> < 0`
    Minus,
    On,
}

const SIDE_TOL: f64 = 1e-12;

pub fn objective_line(c: Vec2) -> Result<LineThroughOrigin> {
    LineThroughOrigin::new(c).map_err(|_| Error::ZeroObjective)
}

pub fn side_of(x: Vec2, c: Vec2) -> Result<HalfPlaneSide> {
    if c.is_zero() {
        return Err(Error::ZeroObjective);
    }
    let s = c.dot(x);
    let slack = SIDE_TOL * c.norm() * x.norm();
    Ok(if s > slack {
        HalfPlaneSide::Plus
    } else if s < -slack {
        HalfPlaneSide::Minus
    } else {
        HalfPlaneSide::On
    })
}

/// `f(x) / dist(x, d0)`, signed by the side of `d0` that `x` is on.
pub fn signed_distance_ratio(x: Vec2, c: Vec2) -> Result<f64> {
    if side_of(x, c)? == HalfPlaneSide::On {
        return Err(Error::PointOnLine);
    }
    let line = objective_line(c)?;
    Ok(c.dot(x) / distance_to_line(x, &line))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistanceArgmax {
    pub vertex: Vertex,
    pub distance: f64,
    pub unique: bool,
    pub tied_with: Vec<Vec2>,
}

/// The region vertex farthest from `d0`. Requires `c >= 0` componentwise.
///
/// Ties use the same relative rule as the enumeration solver, applied to
/// `|c| * distance`, which is the objective value on the Plus side.
pub fn argmax_distance(region: &FeasibleRegion, c: Vec2) -> Result<DistanceArgmax> {
    if c.is_zero() {
        return Err(Error::ZeroObjective);
    }
    if c.x1 < 0.0 || c.x2 < 0.0 {
        return Err(Error::NegativeCoefficient);
    }
    let line = objective_line(c)?;
    let dist: Vec<f64> = region.points().map(|p| distance_to_line(p, &line)).collect();
    let scaled: Vec<f64> = dist.iter().map(|d| d * c.norm()).collect();
    let (best, ties) = argmax_with_ties(&scaled, Tolerances::default().tie).ok_or(Error::EmptyRegion)?;
    Ok(DistanceArgmax {
        vertex: region.vertices()[best].clone(),
        distance: dist[best],
        unique: ties.is_empty(),
        tied_with: ties.iter().map(|&j| region.vertices()[j].point).collect(),
    })
}
