//! Two independent solvers for the planar LP.
//!
//! [`solve_enumeration`] evaluates the objective at every vertex of the
//! enumerated polygon; [`solve_simplex`] runs a tableau simplex on the slack
//! form. They share no code beyond the data model, so each checks the other.

mod enumeration;
mod simplex;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::geometry::Vec2;
use crate::model::{FeasibleRegion, LinearProgram2D, Tolerances, Vertex};

pub use enumeration::{check_recession, enumerate_vertices, enumerate_vertices_with, Recession};
pub use simplex::{solve_simplex, solve_simplex_with};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Solution {
    pub vertex: Vertex,
    pub value: f64,
    /// False when another vertex attains the optimum within tolerance.
    pub unique: bool,
    /// Other optimal vertices, when the solver can name them.
    pub tied_with: Vec<Vec2>,
}

/// Index of the first maximum and the indices tying with it.
///
/// `j` ties with the best value `v` when `v - values[j] <= rel * max(1, |v|)`.
pub fn argmax_with_ties(values: &[f64], rel: f64) -> Option<(usize, Vec<usize>)> {
    let best = (0..values.len()).reduce(|b, i| if values[i] > values[b] { i } else { b })?;
    let v = values[best];
    let slack = rel * v.abs().max(1.0);
    let ties = (0..values.len()).filter(|&j| j != best && v - values[j] <= slack).collect();
    Some((best, ties))
}

/// Maximizes over a pre-enumerated region.
pub fn solve_on_region(region: &FeasibleRegion, objective: Vec2, tol: &Tolerances) -> Result<Solution> {
    if objective.is_zero() {
        return Err(Error::ZeroObjective);
    }
    let values: Vec<f64> = region.points().map(|p| objective.dot(p)).collect();
    let (best, ties) = argmax_with_ties(&values, tol.tie).ok_or(Error::EmptyRegion)?;
    Ok(Solution {
        vertex: region.vertices()[best].clone(),
        value: values[best],
        unique: ties.is_empty(),
        tied_with: ties.iter().map(|&j| region.vertices()[j].point).collect(),
    })
}

pub fn solve_enumeration(lp: &LinearProgram2D) -> Result<Solution> {
    solve_enumeration_with(lp, &Tolerances::default())
}

pub fn solve_enumeration_with(lp: &LinearProgram2D, tol: &Tolerances) -> Result<Solution> {
    lp.validate_for_solve()?;
    let region = enumerate_vertices_with(lp, tol)?;
    solve_on_region(&region, lp.objective, tol)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Enumeration,
    Simplex,
}

impl Method {
    pub fn solve(self, lp: &LinearProgram2D, tol: &Tolerances) -> Result<Solution> {
        match self {
            Method::Enumeration => solve_enumeration_with(lp, tol),
            Method::Simplex => solve_simplex_with(lp, tol),
        }
    }
}

/// Solves a batch of independent programs, results in input order.
pub fn solve_many(lps: &[LinearProgram2D], method: Method, exec: Execution) -> Vec<Result<Solution>> {
    let tol = Tolerances::default();
    exec::map_slice(lps, exec, |lp| method.solve(lp, &tol))
}

/// Index of `point` in the region within the merge tolerance.
pub fn locate(region: &FeasibleRegion, point: Vec2) -> Result<usize> {
    region.position(point, Tolerances::default().merge).ok_or(Error::VertexNotInRegion)
}

/// Counterclockwise predecessor and successor indices of vertex `i`.
pub fn adjacent_indices(region: &FeasibleRegion, i: usize) -> Result<(usize, usize)> {
    let n = region.len();
    if i >= n {
        return Err(Error::VertexNotInRegion);
    }
    Ok(((i + n - 1) % n, (i + 1) % n))
}

/// The corners immediately before and after `v` in counterclockwise order.
pub fn adjacent_vertices<'a>(region: &'a FeasibleRegion, v: &Vertex) -> Result<(&'a Vertex, &'a Vertex)> {
    let (p, s) = adjacent_indices(region, locate(region, v.point)?)?;
    Ok((&region.vertices()[p], &region.vertices()[s]))
}

/// Whether every feasible direction at `vertex` strictly decreases the
/// objective, judged from the active rows alone.
///
/// The tangent cone of a planar vertex is generated by rays along its
/// active boundary lines, so it suffices to test those rays.
pub(crate) fn tangent_cone_is_strict(lp: &LinearProgram2D, vertex: &Vertex, rel: f64) -> bool {
    let normals: Vec<Vec2> = vertex.active_rows.iter().map(|id| id.resolve(lp).normal()).collect();
    let c = lp.objective;
    normals
        .iter()
        .flat_map(|a| {
            let d = (1.0 / a.norm()) * a.perp();
            [d, -d]
        })
        .filter(|d| normals.iter().all(|a| a.dot(*d) <= 1e-9 * a.norm()))
        .all(|d| c.dot(d) < -rel * c.norm())
}
