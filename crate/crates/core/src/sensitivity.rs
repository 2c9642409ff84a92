//! Which gradient directions keep the optimal vertex optimal.
//!
//! Write the gradient in polar form `c = r (cos φ, sin φ)`. At a vertex `x0`
//! of a convex polygon with counterclockwise neighbours `x1` (before) and
//! `x2` (after), `x0` is the strict maximizer exactly when `φ` lies strictly
//! between the angles of the outward normals of the edges `x1 → x0` and
//! `x0 → x2`. With edge-line angles `θ1`, `θ2` taken in `(0, π]` this is
//! `θ1 < φ + π/2 < θ2` whenever that ordering holds; the normal form below
//! also covers corners where it does not (for instance where the cone
//! straddles `φ = 0`).
//!
//! The stable set does not depend on `r`, so a pure rotation `ν` of the
//! gradient keeps `x0` optimal iff `φ_f + ν` stays in the cone. The optimal
//! value then changes to `r |x0| cos(angle(x0) - φ_f - ν)`.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{line_direction_angle, polar_of, Angle, PolarVector, Vec2};
use crate::model::{FeasibleRegion, LinearProgram2D, Tolerances, Vertex};
use crate::normalize::normalize;
use crate::solver::{adjacent_indices, enumerate_vertices_with, solve_on_region};

/// An open interval of angles `(lo, hi)` with `0 < hi - lo < π`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AngleInterval {
    pub lo: Angle,
    pub hi: Angle,
}

impl AngleInterval {
    pub fn new(lo: Angle, hi: Angle) -> Option<Self> {
        let w = hi.0 - lo.0;
        (w > 0.0 && w < PI).then_some(AngleInterval { lo, hi })
    }

    pub fn width(&self) -> Angle {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> Angle {
        Angle(0.5 * (self.lo.0 + self.hi.0))
    }

    /// Strict containment of the literal value (no wrap-around).
    pub fn contains(&self, a: Angle) -> bool {
        self.lo < a && a < self.hi
    }

    /// Strict containment modulo a full turn.
    pub fn contains_direction(&self, a: Angle) -> bool {
        self.contains(self.unwrap_near(a))
    }

    /// `a + 2πk` closest to the midpoint.
    fn unwrap_near(&self, a: Angle) -> Angle {
        let mid = self.midpoint().0;
        Angle(mid + (a.0 - mid + PI).rem_euclid(TAU) - PI)
    }

    pub fn shifted(&self, delta: Angle) -> AngleInterval {
        AngleInterval { lo: self.lo + delta, hi: self.hi + delta }
    }

    /// Same directions, midpoint moved into (-π, π].
    pub fn canonical(&self) -> AngleInterval {
        let delta = self.midpoint().wrapped() - self.midpoint();
        self.shifted(delta)
    }

    /// Same directions, written so that `a` (as given) falls inside the
    /// representative whenever it lies in the cone.
    pub fn around(&self, a: Angle) -> AngleInterval {
        self.shifted(a - self.unwrap_near(a))
    }

    /// Endpoint distance between two intervals, taken modulo 2π.
    pub fn distance_mod_tau(&self, other: &AngleInterval) -> f64 {
        let d = |x: Angle, y: Angle| {
            let r = (x.0 - y.0).rem_euclid(TAU);
            r.min(TAU - r)
        };
        d(self.lo, other.lo).max(d(self.hi, other.hi))
    }

    /// Intersection with `[0, π/2]` after canonicalization, if nonempty.
    pub fn clip_first_quadrant(&self) -> Option<AngleInterval> {
        let c = self.around(Angle(PI / 4.0));
        let lo = c.lo.0.max(0.0);
        let hi = c.hi.0.min(FRAC_PI_2);
        AngleInterval::new(Angle(lo), Angle(hi))
    }
}

/// The vertex tying with the optimum at one end of the stable cone.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EndpointTie {
    pub vertex: Vertex,
    /// `|f(x0) - f(vertex)| / max(1, |f(x0)|)` for the unit gradient at the endpoint.
    pub relative_gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EndpointTies {
    pub lo: EndpointTie,
    pub hi: EndpointTie,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SensitivityReport {
    pub objective: Vec2,
    pub region: FeasibleRegion,
    pub optimal_vertex: Vertex,
    pub optimal_value: f64,
    /// Counterclockwise predecessor of the optimum.
    pub pred: Vertex,
    /// Counterclockwise successor of the optimum.
    pub succ: Vertex,
    pub theta1: Angle,
    pub theta2: Angle,
    /// Gradient angles for which the optimum is unchanged, written around `φ_f`.
    pub interval: AngleInterval,
    pub objective_polar: PolarVector,
    pub phi_inside: bool,
    /// Admissible gradient rotations `ν = φ - φ_f`.
    pub nu_interval: AngleInterval,
    /// Normalizing rotation used when the objective has a negative component.
    pub theta0: Angle,
    pub endpoint_ties: EndpointTies,
    /// Whether `interval == (θ1 - π/2, θ2 - π/2)` literally.
    pub edge_angle_form: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ValueShift {
    Increases,
    Decreases,
    Unchanged,
}

fn check_distinct(pred: &Vertex, x0: &Vertex, succ: &Vertex) -> Result<()> {
    let merge = Tolerances::default().merge;
    let same = |a: Vec2, b: Vec2| (a.x1 - b.x1).abs() <= merge && (a.x2 - b.x2).abs() <= merge;
    if same(pred.point, x0.point) || same(x0.point, succ.point) || same(pred.point, succ.point) {
        return Err(Error::CoincidentVertices);
    }
    Ok(())
}

/// Line angles in (0, π] of `x1 - x0` and `x0 - x2`.
pub fn edge_angles(pred: &Vertex, x0: &Vertex, succ: &Vertex) -> Result<(Angle, Angle)> {
    check_distinct(pred, x0, succ)?;
    Ok((line_direction_angle(pred.point - x0.point)?, line_direction_angle(x0.point - succ.point)?))
}

/// The open cone of gradient angles for which `x0` strictly beats both
/// neighbours, in canonical form (midpoint in (-π, π]).
pub fn stable_angle_interval(pred: &Vertex, x0: &Vertex, succ: &Vertex) -> Result<AngleInterval> {
    check_distinct(pred, x0, succ)?;
    let arriving = x0.point - pred.point;
    let leaving = succ.point - x0.point;
    if arriving.cross(leaving) <= 1e-12 * arriving.norm() * leaving.norm() {
        return Err(Error::ReflexVertex);
    }
    // Outward normals of a counterclockwise boundary: edge direction turned by -90°.
    let n1 = -arriving.perp();
    let n2 = -leaving.perp();
    let lo = n1.angle();
    let turn = f64::atan2(n1.cross(n2), n1.dot(n2));
    AngleInterval::new(lo, Angle(lo.0 + turn)).map(|i| i.canonical()).ok_or(Error::ReflexVertex)
}

pub fn analyze(lp: &LinearProgram2D) -> Result<SensitivityReport> {
    analyze_with(lp, &Tolerances::default())
}

pub fn analyze_with(lp: &LinearProgram2D, tol: &Tolerances) -> Result<SensitivityReport> {
    lp.validate_for_solve()?;
    let region = enumerate_vertices_with(lp, tol)?;
    analyze_region(&region, lp.objective, tol)
}

/// Sensitivity of a pre-enumerated polygon under gradient `c`.
pub fn analyze_region(region: &FeasibleRegion, c: Vec2, tol: &Tolerances) -> Result<SensitivityReport> {
    let polar = polar_of(c);
    let degenerate = |tied: Vec<Vec2>| Error::DegenerateOptimum { tied, phi: polar.phi };

    let sol = solve_on_region(region, c, tol)?;
    if !sol.unique {
        let mut tied = vec![sol.vertex.point];
        tied.extend(&sol.tied_with);
        return Err(degenerate(tied));
    }
    let idx = region.position(sol.vertex.point, 0.0).ok_or(Error::VertexNotInRegion)?;
    let (pi, si) = adjacent_indices(region, idx)?;
    let vs = region.vertices();
    let (pred, x0, succ) = (&vs[pi], &vs[idx], &vs[si]);
    let (theta1, theta2) = edge_angles(pred, x0, succ)?;

    let (cone, theta0) = if c.x1 < 0.0 || c.x2 < 0.0 {
        let norm = normalize(region, c)?;
        let nv = norm.region.vertices();
        let rotated = stable_angle_interval(&nv[pi], &nv[idx], &nv[si])?;
        (rotated.shifted(-norm.theta0), norm.theta0)
    } else {
        (stable_angle_interval(pred, x0, succ)?, Angle::ZERO)
    };

    let interval = cone.around(polar.phi);
    let phi_inside = interval.contains(polar.phi);
    if !phi_inside {
        // Only reachable through rounding right at a cone boundary.
        return Err(degenerate(vec![x0.point]));
    }
    let nu_interval = interval.shifted(-polar.phi);

    let endpoint_ties =
        EndpointTies { lo: runner_up(region, idx, interval.lo), hi: runner_up(region, idx, interval.hi) };
    let edge_lo = theta1.0 - FRAC_PI_2;
    let edge_hi = theta2.0 - FRAC_PI_2;
    let edge_angle_form =
        theta1 < theta2 && (interval.lo.0 - edge_lo).abs() <= 1e-9 && (interval.hi.0 - edge_hi).abs() <= 1e-9;

    Ok(SensitivityReport {
        objective: c,
        region: region.clone(),
        optimal_vertex: x0.clone(),
        optimal_value: sol.value,
        pred: pred.clone(),
        succ: succ.clone(),
        theta1,
        theta2,
        interval,
        objective_polar: polar,
        phi_inside,
        nu_interval,
        theta0,
        endpoint_ties,
        edge_angle_form,
    })
}

/// Best vertex other than `idx` for the unit gradient at `phi`.
fn runner_up(region: &FeasibleRegion, idx: usize, phi: Angle) -> EndpointTie {
    let g = Vec2::unit(phi);
    let x0_value = g.dot(region.vertices()[idx].point);
    let (j, value) = region
        .points()
        .enumerate()
        .filter(|&(j, _)| j != idx)
        .map(|(j, p)| (j, g.dot(p)))
        .fold((usize::MAX, f64::NEG_INFINITY), |best, cur| if cur.1 > best.1 { cur } else { best });
    EndpointTie {
        vertex: region.vertices()[j].clone(),
        relative_gap: (x0_value - value).abs() / x0_value.abs().max(1.0),
    }
}

/// Value at `x0` of the gradient rotated by `nu` (same magnitude).
pub fn value_under_rotation(report: &SensitivityReport, nu: Angle) -> Result<f64> {
    if !report.nu_interval.contains(nu) {
        return Err(Error::RotationOutsideStableCone(nu));
    }
    let x0 = report.optimal_vertex.point;
    let gap = x0.angle().0 - (report.objective_polar.phi.0 + nu.0);
    Ok(report.objective_polar.r * x0.norm() * gap.cos())
}

pub fn classify_value_shift(report: &SensitivityReport, nu: Angle) -> Result<ValueShift> {
    let delta = value_under_rotation(report, nu)? - report.optimal_value;
    Ok(if delta.abs() <= 1e-9 * report.optimal_value.abs() {
        ValueShift::Unchanged
    } else if delta > 0.0 {
        ValueShift::Increases
    } else {
        ValueShift::Decreases
    })
}
