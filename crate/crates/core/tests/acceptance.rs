//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use lpcone::cli::parse_lp;
use lpcone::distance::{argmax_distance, signed_distance_ratio};
use lpcone::normalize::{normalizing_rotation, rotate_problem};
use lpcone::oracle::stable_interval_by_sweep;
use lpcone::sensitivity::{analyze_region, classify_value_shift, stable_angle_interval, value_under_rotation};
use lpcone::solver::{adjacent_vertices, enumerate_vertices, solve_simplex};
use lpcone::{analyze, solve_enumeration, Angle, ConstraintRow, Error, LinearProgram2D, Tolerances, ValueShift, Vec2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    };
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn load(name: &str) -> LinearProgram2D {
    parse_lp(&std::fs::read_to_string(fixture(name)).unwrap()).unwrap()
}

fn rel_close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1.0)
}

fn deg_close(a: Angle, deg: f64, tol: f64) -> bool {
    (a.degrees() - deg).abs() <= tol
}

/// Bounded LP with `m <= 8` rows, coefficients in [-10, 10] and b in [1, 100].
fn random_bounded_lp(rng: &mut ChaCha8Rng, objective: impl Fn(&mut ChaCha8Rng) -> Vec2) -> LinearProgram2D {
    loop {
        let m = rng.gen_range(1..=8);
        let rows = (0..m)
            .map(|_| {
                ConstraintRow::new(rng.gen_range(-10.0..=10.0), rng.gen_range(-10.0..=10.0), rng.gen_range(1.0..=100.0))
            })
            .collect();
        let lp = LinearProgram2D::new(objective(rng), rows);
        if enumerate_vertices(&lp).is_ok() {
            return lp;
        }
    }
}

fn any_objective(rng: &mut ChaCha8Rng) -> Vec2 {
    Vec2::new(rng.gen_range(-10.0..=10.0), rng.gen_range(-10.0..=10.0))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let r = analyze(&load("production.lp")).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let x0 = r.optimal_vertex.point;
    ensure!((x0.x1 - 80.0).abs() <= 1e-9 && (x0.x2 - 40.0).abs() <= 1e-9, "x0 = {x0:?}");
    ensure!(rel_close(r.optimal_value, 280.0, 1e-9), "value = {}", r.optimal_value);
    ensure!(deg_close(r.theta1, 116.5650, 1e-3), "theta1 = {}", r.theta1.degrees());
    ensure!(deg_close(r.theta2, 153.4349, 1e-3), "theta2 = {}", r.theta2.degrees());
    ensure!(deg_close(r.interval.lo, 26.5650, 1e-3), "lo = {}", r.interval.lo.degrees());
    ensure!(deg_close(r.interval.hi, 63.4349, 1e-3), "hi = {}", r.interval.hi.degrees());
    ensure!(deg_close(r.objective_polar.phi, 56.3099, 1e-2), "phi_f = {}", r.objective_polar.phi.degrees());
    ensure!(rel_close(r.objective_polar.r, 13f64.sqrt(), 1e-9), "r_f = {}", r.objective_polar.r);
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!(
        "x0 = (80, 40), value 280, cone ({:.4}, {:.4}) deg in {elapsed:.2?}",
        r.interval.lo.degrees(),
        r.interval.hi.degrees()
    ))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_lpcone"))
        .args(["sensitivity", "--json", "--check-sweep", "0.01"])
        .arg(fixture("production.lp"))
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure!(out.status.code() == Some(0), "exit status {:?}", out.status);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let oracle = &doc["oracle"];
    ensure!(oracle["passed"] == serde_json::Value::Bool(true), "oracle = {oracle}");
    let err_deg = oracle["max_endpoint_error"].as_f64().ok_or("missing error")?.to_degrees();
    ensure!(err_deg <= 0.02, "endpoint error {err_deg} deg");
    ensure!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    Ok(format!("sweep endpoints within {err_deg:.2e} deg in {elapsed:.2?}"))
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let (mut compared, mut skipped) = (0, 0);
    for case in 0..1000 {
        let lp = random_bounded_lp(&mut rng, any_objective);
        let a = solve_enumeration(&lp).map_err(|e| format!("case {case}: enumeration {e}"))?;
        let b = solve_simplex(&lp).map_err(|e| format!("case {case}: simplex {e}"))?;
        if !(a.unique && b.unique) {
            skipped += 1;
            continue;
        }
        let (p, q) = (a.vertex.point, b.vertex.point);
        ensure!((p.x1 - q.x1).abs() <= 1e-6 && (p.x2 - q.x2).abs() <= 1e-6, "case {case}: {p:?} vs {q:?} on {lp:?}");
        ensure!(rel_close(a.value, b.value, 1e-9), "case {case}: {} vs {}", a.value, b.value);
        compared += 1;
    }
    Ok(format!("1000 programs, {compared} unique optima compared, {skipped} ties skipped, 0 disagreements"))
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let mut checked = 0;
    while checked < 200 {
        let lp = random_bounded_lp(&mut rng, |r| Vec2::new(r.gen_range(0.01..=10.0), r.gen_range(0.01..=10.0)));
        let sol = solve_enumeration(&lp).map_err(|e| e.to_string())?;
        if !sol.unique {
            continue;
        }
        let region = enumerate_vertices(&lp).map_err(|e| e.to_string())?;
        let d = argmax_distance(&region, lp.objective).map_err(|e| e.to_string())?;
        ensure!(d.vertex.point == sol.vertex.point, "{:?} vs {:?} on {lp:?}", d.vertex.point, sol.vertex.point);
        checked += 1;
    }
    Ok(format!("{checked} programs, distance argmax equals solver vertex in all"))
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let (mut plus, mut minus) = (0, 0);
    while plus + minus < 1000 {
        let c = Vec2::new(rng.gen_range(-10.0..=10.0), rng.gen_range(-10.0..=10.0));
        let x = Vec2::new(rng.gen_range(-100.0..=100.0), rng.gen_range(-100.0..=100.0));
        let s = c.x1 * x.x1 + c.x2 * x.x2;
        let norm_c = c.x1.hypot(c.x2);
        if norm_c < 1e-6 || s.abs() <= 1e-6 * norm_c * x.x1.hypot(x.x2) {
            continue;
        }
        let ratio = signed_distance_ratio(x, c).map_err(|e| e.to_string())?;
        let expected = if s > 0.0 { norm_c } else { -norm_c };
        ensure!(rel_close(ratio, expected, 1e-9), "ratio {ratio} vs {expected} for c = {c:?}, x = {x:?}");
        if s > 0.0 {
            plus += 1;
        } else {
            minus += 1;
        }
    }
    Ok(format!("{plus} plus-side and {minus} minus-side pairs match +-|c|"))
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let tol = Tolerances::default();
    let mut checked = 0;
    let mut worst: f64 = 0.0;
    while checked < 200 {
        let lp = random_bounded_lp(&mut rng, |r| {
            let (a, b) = (r.gen_range(0.1..=10.0), r.gen_range(0.1..=10.0));
            match r.gen_range(0..3) {
                0 => Vec2::new(-a, b),
                1 => Vec2::new(a, -b),
                _ => Vec2::new(-a, -b),
            }
        });
        let report = match analyze(&lp) {
            Ok(r) => r,
            Err(Error::DegenerateOptimum { .. }) => continue,
            Err(e) => return Err(e.to_string()),
        };
        let region = enumerate_vertices(&lp).map_err(|e| e.to_string())?;
        let theta0 = normalizing_rotation(lp.objective).map_err(|e| e.to_string())?;
        let (rotated, c_rot) = rotate_problem(&region, lp.objective, theta0);
        ensure!(
            c_rot.x1 >= -1e-9 * c_rot.x1.hypot(c_rot.x2) && c_rot.x2 >= -1e-9 * c_rot.x1.hypot(c_rot.x2),
            "rotated gradient {c_rot:?}"
        );
        for (p, q) in region.points().zip(rotated.points()) {
            let (f, g) = (lp.objective.dot(p), c_rot.dot(q));
            ensure!((f - g).abs() <= 1e-9 * f.abs().max(1.0), "value {f} vs {g} at {p:?}");
        }
        let rot_report = analyze_region(&rotated, c_rot, &tol).map_err(|e| e.to_string())?;
        let expected = rot_report.interval.shifted(-theta0);
        let err = report.interval.distance_mod_tau(&expected);
        ensure!(err <= 1e-9, "interval {:?} vs {:?} (error {err})", report.interval, expected);
        worst = worst.max(err);
        checked += 1;
    }
    Ok(format!("{checked} mixed-sign programs, worst endpoint error {worst:.1e} rad"))
}

fn criterion_7() -> Outcome {
    let base = load("production.lp");
    let cases = [
        (Vec2::new(2.0, 1.0), Vec2::new(100.0, 0.0), Vec2::new(80.0, 40.0), 200.0),
        (Vec2::new(1.0, 2.0), Vec2::new(80.0, 40.0), Vec2::new(60.0, 50.0), 160.0),
    ];
    for (c, p, q, value) in cases {
        let lp = base.with_objective(c);
        let (fp, fq) = (lp.evaluate(p), lp.evaluate(q));
        ensure!((fp - value).abs() <= 1e-12 && (fq - value).abs() <= 1e-12, "values {fp}, {fq} for {c:?}");
        match analyze(&lp) {
            Err(Error::DegenerateOptimum { tied, .. }) => {
                let has = |v: Vec2| tied.iter().any(|t| (*t - v).norm() <= 1e-9);
                ensure!(has(p) && has(q) && tied.len() == 2, "tied = {tied:?} for {c:?}");
            }
            other => return Err(format!("{c:?}: expected DegenerateOptimum, got {other:?}")),
        }
    }
    Ok("(2,1) ties (100,0)/(80,40) at 200, (1,2) ties (80,40)/(60,50) at 160".to_owned())
}

fn criterion_8() -> Outcome {
    let r = analyze(&load("production.lp")).map_err(|e| e.to_string())?;
    let minus = classify_value_shift(&r, Angle::from_degrees(-1.0)).map_err(|e| e.to_string())?;
    let plus = classify_value_shift(&r, Angle::from_degrees(1.0)).map_err(|e| e.to_string())?;
    let at_zero = value_under_rotation(&r, Angle::ZERO).map_err(|e| e.to_string())?;
    ensure!(minus == ValueShift::Increases, "nu = -1 deg gives {minus:?}");
    ensure!(plus == ValueShift::Decreases, "nu = +1 deg gives {plus:?}");
    ensure!(rel_close(at_zero, 280.0, 1e-9), "value at nu = 0 is {at_zero}");
    Ok("nu = -1 deg increases, nu = +1 deg decreases, value(0) = 280".to_owned())
}

fn criterion_9() -> Outcome {
    let region = enumerate_vertices(&load("production.lp")).map_err(|e| e.to_string())?;
    ensure!(region.len() == 5, "expected 5 vertices, got {}", region.len());
    let step = Angle::from_degrees(0.01);
    let mut worst: f64 = 0.0;
    let mut crossing_zero = false;
    for v in region.vertices() {
        let (pred, succ) = adjacent_vertices(&region, v).map_err(|e| e.to_string())?;
        let analytic = stable_angle_interval(pred, v, succ).map_err(|e| e.to_string())?;
        let sweep = stable_interval_by_sweep(&region, v.point, step).map_err(|e| e.to_string())?;
        let est = sweep.estimated_interval.ok_or_else(|| format!("no sweep interval at {:?}", v.point))?;
        let err = analytic.distance_mod_tau(&est).to_degrees();
        ensure!(err <= 0.02, "{:?}: analytic {analytic:?} vs sweep {est:?}", v.point);
        worst = worst.max(err);
        if v.point == Vec2::new(100.0, 0.0) {
            crossing_zero = analytic.contains_direction(Angle::ZERO);
        }
    }
    ensure!(crossing_zero, "cone at (100, 0) does not contain phi = 0");
    Ok(format!("5 vertices, worst endpoint error {worst:.2e} deg, (100,0) cone crosses 0 deg"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("worked example reproduction", criterion_1),
        ("sweep oracle certification", criterion_2),
        ("simplex / enumeration agreement", criterion_3),
        ("distance reformulation argmax", criterion_4),
        ("signed distance ratio", criterion_5),
        ("rotation conjugation of the cone", criterion_6),
        ("endpoint ties are degenerate", criterion_7),
        ("value-shift direction", criterion_8),
        ("cone at every vertex vs sweep", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
