use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::geometry::{Angle, Vec2};
use crate::model::ActiveRow;
use crate::oracle::OracleCheck;
use crate::sensitivity::{AngleInterval, SensitivityReport};
use crate::solver::{Method, Solution};

pub const SCHEMA_VERSION: u32 = 1;

/// Machine-readable sensitivity report. Angles are radians.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub input: String,
    pub tolerance: f64,
    pub solver: Method,
    #[serde(flatten)]
    pub report: SensitivityReport,
    /// `interval` intersected with `[0, π/2]`, when clipping was requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub clipped_interval: Option<Option<AngleInterval>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleCheck>,
}

/// Up to nine decimals with trailing zeros dropped; `-0` prints as `0`.
pub fn fmt_num(x: f64) -> String {
    let s = format!("{x:.9}");
    let s = if s.contains('.') { s.trim_end_matches('0').trim_end_matches('.') } else { &s };
    if s == "-0" {
        "0".to_owned()
    } else {
        s.to_owned()
    }
}

pub fn fmt_point(p: Vec2) -> String {
    format!("({}, {})", fmt_num(p.x1), fmt_num(p.x2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngleUnit {
    Degrees,
    Radians,
}

impl AngleUnit {
    pub fn fmt(self, a: Angle) -> String {
        match self {
            AngleUnit::Degrees => format!("{:.4} deg", a.degrees()),
            AngleUnit::Radians => format!("{:.6} rad", a.radians()),
        }
    }

    pub fn fmt_interval(self, i: &AngleInterval) -> String {
        format!("({}, {})", self.fmt(i.lo), self.fmt(i.hi))
    }
}

pub fn fmt_rows(rows: impl IntoIterator<Item = ActiveRow>) -> String {
    rows.into_iter()
        .map(|r| match r {
            ActiveRow::Constraint(i) => format!("row {}", i + 1),
            ActiveRow::NonNegX1 => "x1 >= 0".to_owned(),
            ActiveRow::NonNegX2 => "x2 >= 0".to_owned(),
        })
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn render_solution(sol: &Solution, method: Method) -> String {
    let mut out = format!("x* = {}, value = {}\n", fmt_point(sol.vertex.point), fmt_num(sol.value));
    let _ = writeln!(out, "active: {}", fmt_rows(sol.vertex.active_rows.iter().copied()));
    let name = match method {
        Method::Enumeration => "enumeration",
        Method::Simplex => "simplex",
    };
    let _ = writeln!(out, "solver: {name}, {}", if sol.unique { "unique optimum" } else { "optimum not unique" });
    for p in &sol.tied_with {
        let _ = writeln!(out, "also optimal: {}", fmt_point(*p));
    }
    out
}

pub fn render_report(doc: &ReportDocument, unit: AngleUnit) -> String {
    let r = &doc.report;
    let mut out = String::new();
    let _ = writeln!(out, "x* = {}, value = {}", fmt_point(r.optimal_vertex.point), fmt_num(r.optimal_value));
    let _ = writeln!(out, "predecessor = {}", fmt_point(r.pred.point));
    let _ = writeln!(out, "successor   = {}", fmt_point(r.succ.point));
    let _ = writeln!(out, "theta1 = {}", unit.fmt(r.theta1));
    let _ = writeln!(out, "theta2 = {}", unit.fmt(r.theta2));
    let _ = writeln!(out, "stable phi interval = {}", unit.fmt_interval(&r.interval));
    if !r.edge_angle_form {
        let _ = writeln!(
            out,
            "  (edge-normal form; theta1 - 90 < phi < theta2 - 90 does not hold literally at this corner)"
        );
    }
    if let Some(clipped) = &doc.clipped_interval {
        match clipped {
            Some(c) => {
                let _ = writeln!(out, "clipped to first quadrant = {}", unit.fmt_interval(c));
            }
            None => {
                let _ = writeln!(out, "clipped to first quadrant = (empty)");
            }
        }
    }
    let _ = writeln!(out, "phi_f = {}, r_f = {:.4}", unit.fmt(r.objective_polar.phi), r.objective_polar.r);
    let _ = writeln!(out, "nu interval = {}", unit.fmt_interval(&r.nu_interval));
    let _ = writeln!(out, "theta0 = {}", unit.fmt(r.theta0));
    let _ = writeln!(
        out,
        "endpoint ties: {} at lo, {} at hi",
        fmt_point(r.endpoint_ties.lo.vertex.point),
        fmt_point(r.endpoint_ties.hi.vertex.point)
    );
    if let Some(o) = &doc.oracle {
        let _ = writeln!(
            out,
            "sweep oracle (step {}): {}, max endpoint error {}, {}",
            unit.fmt(o.step),
            unit.fmt_interval(&o.sweep),
            unit.fmt(o.max_endpoint_error),
            if o.passed { "PASS" } else { "FAIL" }
        );
    }
    out
}
