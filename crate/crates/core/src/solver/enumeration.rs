use std::collections::BTreeSet;
use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::geometry::Vec2;
use crate::model::{ActiveRow, FeasibleRegion, LinearProgram2D, Tolerances, Vertex};

/// Outcome of the recession-cone test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Recession {
    Bounded,
    /// A unit direction `d >= 0` with `Ad <= 0`.
    Unbounded(Vec2),
}

/// Whether `{x >= 0 : Ax <= b}` contains a ray.
///
/// Directions `d = (cos t, sin t)` with `t` in `[0, pi/2]` cover the
/// nonnegative quadrant. Each row cuts that quarter arc down to a
/// sub-interval (a sinusoid changes sign at most once over a quarter
/// period), so the recession cone is nonzero iff the intersection of all
/// those intervals is nonempty.
pub fn check_recession(lp: &LinearProgram2D) -> Recession {
    let (mut lo, mut hi) = (0.0f64, FRAC_PI_2);
    for row in &lp.constraints {
        let (a1, a2) = (row.a1, row.a2);
        match (a1 > 0.0, a2 > 0.0) {
            (true, true) => return Recession::Bounded,
            (false, false) => {}
            // Negative at t = 0, positive at pi/2: keep [0, t*].
            (false, true) => hi = hi.min(f64::atan2(-a1, a2)),
            (true, false) => lo = lo.max(f64::atan2(a1, -a2)),
        }
        if lo > hi + 1e-12 {
            return Recession::Bounded;
        }
    }
    let t = 0.5 * (lo + hi.max(lo));
    let d = Vec2::new(t.cos(), t.sin());
    let ok = lp.constraints.iter().all(|r| r.lhs(d) <= 1e-9 * r.normal().norm());
    if ok {
        Recession::Unbounded(d)
    } else {
        Recession::Bounded
    }
}

pub fn enumerate_vertices(lp: &LinearProgram2D) -> Result<FeasibleRegion> {
    enumerate_vertices_with(lp, &Tolerances::default())
}

/// Every feasible pairwise intersection of boundary lines, merged and sorted
/// counterclockwise starting from the lowest (then leftmost) vertex.
pub fn enumerate_vertices_with(lp: &LinearProgram2D, tol: &Tolerances) -> Result<FeasibleRegion> {
    lp.validate()?;
    let rows: Vec<_> = lp.all_rows().collect();

    let mut found: Vec<(Vec2, BTreeSet<ActiveRow>)> = Vec::new();
    for (i, &(id_i, ri)) in rows.iter().enumerate() {
        for &(id_j, rj) in &rows[i + 1..] {
            let det = ri.normal().cross(rj.normal());
            if det.abs() <= 1e-12 * ri.normal().norm() * rj.normal().norm() {
                continue;
            }
            let x = Vec2::new((ri.b * rj.a2 - ri.a2 * rj.b) / det + 0.0, (ri.a1 * rj.b - ri.b * rj.a1) / det + 0.0);
            if !x.is_finite() || !lp.is_feasible(x, tol.feasibility) {
                continue;
            }
            match found.iter_mut().find(|(p, _)| (p.x1 - x.x1).abs() <= tol.merge && (p.x2 - x.x2).abs() <= tol.merge) {
                Some((_, active)) => {
                    active.insert(id_i);
                    active.insert(id_j);
                }
                None => found.push((x, BTreeSet::from([id_i, id_j]))),
            }
        }
    }

    if found.is_empty() {
        return Err(Error::Infeasible);
    }
    if let Recession::Unbounded(d) = check_recession(lp) {
        return Err(Error::UnboundedRegion(d));
    }
    if found.len() < 3 {
        return Err(Error::DegenerateRegion);
    }

    let n = found.len() as f64;
    let centroid = found.iter().fold(Vec2::ZERO, |acc, (p, _)| acc + (1.0 / n) * *p);
    found.sort_by(|(p, _), (q, _)| {
        let (a, b) = ((*p - centroid).angle(), (*q - centroid).angle());
        a.0.total_cmp(&b.0)
    });

    // Drop points lying on an edge between their neighbours.
    loop {
        let k = found.len();
        if k < 3 {
            return Err(Error::DegenerateRegion);
        }
        let flat = (0..k).find(|&i| {
            let prev = found[(i + k - 1) % k].0;
            let cur = found[i].0;
            let next = found[(i + 1) % k].0;
            let (e1, e2) = (cur - prev, next - cur);
            e1.cross(e2) <= 1e-9 * e1.norm() * e2.norm()
        });
        match flat {
            Some(i) => {
                found.remove(i);
            }
            None => break,
        }
    }

    let start = (0..found.len())
        .min_by(|&i, &j| {
            let (p, q) = (found[i].0, found[j].0);
            p.x2.total_cmp(&q.x2).then(p.x1.total_cmp(&q.x1))
        })
        .unwrap_or(0);
    found.rotate_left(start);

    Ok(FeasibleRegion::from_ccw(found.into_iter().map(|(point, active_rows)| Vertex { point, active_rows }).collect()))
}
