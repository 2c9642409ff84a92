//! Brute-force certification of stable cones by sweeping gradient angles.
//!
//! For each sampled angle the unit gradient is evaluated at every vertex and
//! the strict maximizer recorded. The run of samples won by the vertex under
//! test brackets its cone; bisection then tightens each end. Nothing here
//! uses the edge-normal construction of [`crate::sensitivity`].

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::geometry::{Angle, Vec2};
use crate::model::{FeasibleRegion, LinearProgram2D, Tolerances};
use crate::sensitivity::{AngleInterval, SensitivityReport};
use crate::solver::{argmax_with_ties, locate, solve_simplex};

/// Strict maximizer at one sampled angle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepArgmax {
    /// Index into the region's vertex list.
    Vertex(usize),
    Tie,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepSample {
    pub phi: Angle,
    pub argmax: SweepArgmax,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub samples: Vec<SweepSample>,
    pub estimated_interval: Option<AngleInterval>,
    pub step: Angle,
}

/// Strict argmax of the unit gradient at `phi` over the region's vertices.
pub fn argmax_at(region: &FeasibleRegion, phi: Angle) -> SweepArgmax {
    let g = Vec2::unit(phi);
    let values: Vec<f64> = region.points().map(|p| g.dot(p)).collect();
    match argmax_with_ties(&values, Tolerances::default().tie) {
        Some((i, ties)) if ties.is_empty() => SweepArgmax::Vertex(i),
        _ => SweepArgmax::Tie,
    }
}

fn check_step(step: Angle) -> Result<()> {
    if !(step.0 > 0.0 && step.0.is_finite()) {
        return Err(Error::InvalidSweep("step must be positive"));
    }
    Ok(())
}

/// Samples `phi_lo, phi_lo + step, ...` up to `phi_hi` inclusive.
pub fn sweep_argmax(region: &FeasibleRegion, phi_lo: Angle, phi_hi: Angle, step: Angle) -> Result<SweepResult> {
    sweep_argmax_with(region, phi_lo, phi_hi, step, Execution::default())
}

pub fn sweep_argmax_with(
    region: &FeasibleRegion,
    phi_lo: Angle,
    phi_hi: Angle,
    step: Angle,
    exec: Execution,
) -> Result<SweepResult> {
    check_step(step)?;
    if phi_lo.0.is_nan() || phi_hi.0.is_nan() || phi_lo.0 >= phi_hi.0 {
        return Err(Error::InvalidSweep("phi_lo must be below phi_hi"));
    }
    if region.is_empty() {
        return Err(Error::EmptyRegion);
    }
    let n = ((phi_hi.0 - phi_lo.0) / step.0 + 1e-9).floor() as usize + 1;
    let samples = exec::map_indexed(n, exec, |k| {
        let phi = Angle(phi_lo.0 + k as f64 * step.0);
        SweepSample { phi, argmax: argmax_at(region, phi) }
    });
    Ok(SweepResult { samples, estimated_interval: None, step })
}

/// Sweeps the full turn `(-π, π]` and locates the cone of `x0`.
pub fn stable_interval_by_sweep(region: &FeasibleRegion, x0: Vec2, step: Angle) -> Result<SweepResult> {
    stable_interval_by_sweep_with(region, x0, step, Execution::default())
}

pub fn stable_interval_by_sweep_with(
    region: &FeasibleRegion,
    x0: Vec2,
    step: Angle,
    exec: Execution,
) -> Result<SweepResult> {
    check_step(step)?;
    let target = locate(region, x0)?;
    sweep_full_turn(step, exec, |phi| argmax_at(region, phi), target)
}

/// Like [`stable_interval_by_sweep`], but every sample re-solves the LP
/// with the simplex method instead of evaluating the enumerated vertices.
pub fn stable_interval_by_simplex_sweep(
    lp: &LinearProgram2D,
    region: &FeasibleRegion,
    x0: Vec2,
    step: Angle,
) -> Result<SweepResult> {
    check_step(step)?;
    let target = locate(region, x0)?;
    let classify = |phi: Angle| match solve_simplex(&lp.with_objective(Vec2::unit(phi))) {
        Ok(s) if s.unique => match locate(region, s.vertex.point) {
            Ok(i) => SweepArgmax::Vertex(i),
            Err(_) => SweepArgmax::Tie,
        },
        _ => SweepArgmax::Tie,
    };
    sweep_full_turn(step, Execution::default(), classify, target)
}

fn sweep_full_turn<F>(step: Angle, exec: Execution, classify: F, target: usize) -> Result<SweepResult>
where
    F: Fn(Angle) -> SweepArgmax + Sync + Send,
{
    let n = (TAU / step.0 + 1e-9).floor() as usize;
    if n < 3 {
        return Err(Error::InvalidSweep("step too coarse for a full turn"));
    }
    let samples: Vec<SweepSample> = exec::map_indexed(n, exec, |k| {
        let phi = Angle(-PI + (k + 1) as f64 * step.0);
        SweepSample { phi, argmax: classify(phi) }
    });
    let wins: Vec<bool> = samples.iter().map(|s| s.argmax == SweepArgmax::Vertex(target)).collect();
    if !wins.contains(&true) {
        return Err(Error::VertexNeverOptimal);
    }
    if !wins.contains(&false) {
        return Err(Error::InvalidSweep("vertex wins every sample"));
    }

    // Longest cyclic run of wins, as (start, length).
    let mut best = (0usize, 0usize);
    for s in (0..n).filter(|&s| wins[s] && !wins[(s + n - 1) % n]) {
        let len = (0..n).take_while(|&k| wins[(s + k) % n]).count();
        if len > best.1 {
            best = (s, len);
        }
    }
    let (s, len) = best;
    let e = s + len - 1;
    // Unwrapped sample angle: indices past n continue beyond π.
    let phi_at = |k: isize| -PI + (k + 1) as f64 * step.0 + if k >= n as isize { TAU - n as f64 * step.0 } else { 0.0 };
    let wins_at = |a: f64| classify(Angle(a)) == SweepArgmax::Vertex(target);
    let resolution = step.0 / 1024.0;

    let (mut out, mut inside) =
        (if s == 0 { samples[n - 1].phi.0 - TAU } else { samples[s - 1].phi.0 }, samples[s].phi.0);
    while inside - out > resolution {
        let mid = 0.5 * (out + inside);
        if wins_at(mid) {
            inside = mid
        } else {
            out = mid
        }
    }
    let lo = 0.5 * (out + inside);

    let (mut inside, mut out) = (phi_at(e as isize), phi_at(e as isize + 1));
    while out - inside > resolution {
        let mid = 0.5 * (out + inside);
        if wins_at(mid) {
            inside = mid
        } else {
            out = mid
        }
    }
    let hi = 0.5 * (out + inside);

    let estimated_interval = AngleInterval::new(Angle(lo), Angle(hi)).map(|i| i.canonical());
    Ok(SweepResult { samples, estimated_interval, step })
}

/// Agreement between an analytic cone and the sweep estimate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub analytic: AngleInterval,
    pub sweep: AngleInterval,
    pub step: Angle,
    /// Largest endpoint discrepancy, modulo a full turn.
    pub max_endpoint_error: Angle,
    pub tolerance: Angle,
    pub passed: bool,
}

/// Sweeps the report's region and compares endpoints against `2 * step`.
pub fn certify(report: &SensitivityReport, step: Angle) -> Result<OracleCheck> {
    let sweep = stable_interval_by_sweep(&report.region, report.optimal_vertex.point, step)?;
    let estimate = sweep.estimated_interval.ok_or(Error::InvalidSweep("sweep produced no interval"))?;
    let err = report.interval.distance_mod_tau(&estimate);
    let tolerance = Angle(2.0 * step.0);
    Ok(OracleCheck {
        analytic: report.interval,
        sweep: estimate,
        step,
        max_endpoint_error: Angle(err),
        tolerance,
        passed: err <= tolerance.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::fixtures::*;
    use crate::sensitivity::analyze;
    use crate::solver::enumerate_vertices;

    fn production_region() -> FeasibleRegion {
        enumerate_vertices(&production_lp()).unwrap()
    }

    #[test]
    fn argmax_examples() {
        let region = production_region();
        let x0 = locate(&region, Vec2::new(80.0, 40.0)).unwrap();
        let right = locate(&region, Vec2::new(100.0, 0.0)).unwrap();
        assert_eq!(argmax_at(&region, Angle::from_degrees(45.0)), SweepArgmax::Vertex(x0));
        assert_eq!(argmax_at(&region, Angle::from_degrees(20.0)), SweepArgmax::Vertex(right));
        assert_eq!(argmax_at(&region, Vec2::new(2.0, 1.0).angle()), SweepArgmax::Tie);

        let r = sweep_argmax(&region, Angle::from_degrees(20.0), Angle::from_degrees(45.0), Angle::from_degrees(5.0))
            .unwrap();
        assert_eq!(r.samples.len(), 6);
        assert_eq!(r.samples[0].argmax, SweepArgmax::Vertex(right));
        assert_eq!(r.samples[5].argmax, SweepArgmax::Vertex(x0));
        assert!(r.samples.windows(2).all(|w| w[0].phi < w[1].phi));
        assert!(r.estimated_interval.is_none());
    }

    #[test]
    fn sweep_rejects_bad_input() {
        let region = production_region();
        let (a, b) = (Angle(0.0), Angle(1.0));
        assert!(matches!(sweep_argmax(&region, b, a, Angle(0.1)), Err(Error::InvalidSweep(_))));
        assert!(matches!(sweep_argmax(&region, a, b, Angle(0.0)), Err(Error::InvalidSweep(_))));
        let empty = FeasibleRegion::from_ccw(vec![]);
        assert_eq!(sweep_argmax(&empty, a, b, Angle(0.1)), Err(Error::EmptyRegion));
    }

    #[test]
    fn production_cone_by_sweep() {
        let r =
            stable_interval_by_sweep(&production_region(), Vec2::new(80.0, 40.0), Angle::from_degrees(0.01)).unwrap();
        let i = r.estimated_interval.unwrap();
        assert!((i.lo.degrees() - 26.5650).abs() < 0.02);
        assert!((i.hi.degrees() - 63.4349).abs() < 0.02);
        // Bisection takes the endpoint well below the sample spacing.
        assert!((i.lo.degrees() - 26.565_051_177_077_99).abs() < 0.01 / 512.0);
        assert!((i.hi.degrees() - 63.434_948_822_922_01).abs() < 0.01 / 512.0);
    }

    #[test]
    fn square_and_origin_cones_by_sweep() {
        let sq = enumerate_vertices(&box_lp(1.0, 1.0, Vec2::new(1.0, 1.0))).unwrap();
        let i = stable_interval_by_sweep(&sq, Vec2::new(1.0, 1.0), Angle::from_degrees(0.01))
            .unwrap()
            .estimated_interval
            .unwrap();
        assert!(i.lo.degrees().abs() < 0.02 && (i.hi.degrees() - 90.0).abs() < 0.02);

        let origin = stable_interval_by_sweep(&production_region(), Vec2::ZERO, Angle::from_degrees(0.01))
            .unwrap()
            .estimated_interval
            .unwrap();
        assert!((origin.lo.degrees() + 180.0).abs() < 0.02, "{}", origin.lo.degrees());
        assert!((origin.hi.degrees() + 90.0).abs() < 0.02);
    }

    #[test]
    fn wrapping_cone_is_joined_across_the_cut() {
        // The origin of this triangle wins for φ in (135°, 225°), which
        // straddles the ±180° cut.
        let tri = FeasibleRegion::from_points(&[Vec2::new(0.0, 0.0), Vec2::new(1.0, -1.0), Vec2::new(1.0, 1.0)]);
        let r = stable_interval_by_sweep(&tri, Vec2::ZERO, Angle::from_degrees(0.05)).unwrap();
        let i = r.estimated_interval.unwrap();
        assert!((i.lo.degrees() - 135.0).abs() < 0.1 && (i.hi.degrees() - 225.0).abs() < 0.1, "{i:?}");
    }

    #[test]
    fn never_optimal_vertex() {
        let region = production_region();
        let missing = stable_interval_by_sweep(&region, Vec2::new(7.0, 7.0), Angle(0.01));
        assert_eq!(missing.unwrap_err(), Error::VertexNotInRegion);
        let thin = FeasibleRegion::from_points(&[
            Vec2::new(0.0, 0.0),
            Vec2::new(1.0, 0.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(0.0, 1.0),
        ]);
        // A 90° sample spacing never lands strictly inside a 90° cone's interior
        // for the corner at the origin: samples are -90°, 0°, 90°, 180°, all ties.
        let r = stable_interval_by_sweep(&thin, Vec2::ZERO, Angle::from_degrees(90.0));
        assert_eq!(r.unwrap_err(), Error::VertexNeverOptimal);
    }

    #[test]
    fn sweeps_are_deterministic_across_policies() {
        let region = production_region();
        let step = Angle::from_degrees(0.05);
        let a = stable_interval_by_sweep_with(&region, Vec2::new(80.0, 40.0), step, Execution::Sequential).unwrap();
        let b = stable_interval_by_sweep_with(&region, Vec2::new(80.0, 40.0), step, Execution::Parallel).unwrap();
        assert_eq!(a, b);
        let c = stable_interval_by_sweep_with(&region, Vec2::new(80.0, 40.0), step, Execution::Parallel).unwrap();
        assert_eq!(b, c);
    }

    #[test]
    fn sweep_interior_is_won_by_x0() {
        let region = production_region();
        let step = Angle::from_degrees(0.1);
        let r = stable_interval_by_sweep(&region, Vec2::new(80.0, 40.0), step).unwrap();
        let i = r.estimated_interval.unwrap();
        let x0 = locate(&region, Vec2::new(80.0, 40.0)).unwrap();
        for s in &r.samples {
            if s.phi.0 > i.lo.0 + step.0 && s.phi.0 < i.hi.0 - step.0 {
                assert_eq!(s.argmax, SweepArgmax::Vertex(x0));
            }
        }
    }

    #[test]
    fn simplex_sweep_agrees() {
        let lp = production_lp();
        let region = production_region();
        let step = Angle::from_degrees(0.5);
        let by_simplex = stable_interval_by_simplex_sweep(&lp, &region, Vec2::new(80.0, 40.0), step).unwrap();
        let by_vertices = stable_interval_by_sweep(&region, Vec2::new(80.0, 40.0), step).unwrap();
        let (a, b) = (by_simplex.estimated_interval.unwrap(), by_vertices.estimated_interval.unwrap());
        assert!(a.distance_mod_tau(&b) <= 2.0 * step.0);
    }

    #[test]
    fn certify_production_report() {
        let report = analyze(&production_lp()).unwrap();
        let check = certify(&report, Angle::from_degrees(0.01)).unwrap();
        assert!(check.passed, "{check:?}");
        assert!(check.max_endpoint_error.degrees() < 0.02);
    }
}
