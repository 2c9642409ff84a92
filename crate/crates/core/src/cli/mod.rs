//! Command-line front end: `solve` and `sensitivity` subcommands.
//!
//! Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | input error (I/O, syntax, invalid program, degenerate region) |
//! | 2 | infeasible |
//! | 3 | unbounded region or objective |
//! | 4 | sweep oracle disagrees with the analytic cone |
//! | 5 | optimum attained on an edge (tied vertices printed) |

mod parse;
mod report;
mod svg;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::geometry::Angle;
use crate::model::{LinearProgram2D, Tolerances};
use crate::oracle::certify;
use crate::sensitivity::analyze_with;
use crate::solver::Method;

pub use parse::{parse_lp, serialize_lp};
pub use report::{fmt_num, fmt_point, render_report, render_solution, AngleUnit, ReportDocument, SCHEMA_VERSION};
pub use svg::{emit_svg, render_svg};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;
pub const EXIT_UNBOUNDED: i32 = 3;
pub const EXIT_ORACLE: i32 = 4;
pub const EXIT_DEGENERATE: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "lpcone", version, about = "Planar LP solver with objective-direction sensitivity")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve the program and print the optimal vertex.
    Solve(SolveArgs),
    /// Report the cone of objective directions keeping the optimum unchanged.
    Sensitivity(SensitivityArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SolverChoice {
    Enumeration,
    Simplex,
}

impl From<SolverChoice> for Method {
    fn from(c: SolverChoice) -> Method {
        match c {
            SolverChoice::Enumeration => Method::Enumeration,
            SolverChoice::Simplex => Method::Simplex,
        }
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub file: PathBuf,
    #[arg(long, value_enum, default_value = "enumeration")]
    pub solver: SolverChoice,
    /// Relative feasibility tolerance.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct SensitivityArgs {
    pub file: PathBuf,
    /// Print the JSON report only.
    #[arg(long)]
    pub json: bool,
    /// Print angles in radians instead of degrees.
    #[arg(long)]
    pub radians: bool,
    /// Write an SVG figure of the polygon and the stable cone.
    #[arg(long, value_name = "PATH")]
    pub svg: Option<PathBuf>,
    /// Also report the stable interval intersected with [0°, 90°].
    #[arg(long)]
    pub clip_first_quadrant: bool,
    /// Certify the interval with a brute-force sweep at this step (degrees).
    #[arg(long, value_name = "STEP")]
    pub check_sweep: Option<f64>,
    /// Relative feasibility tolerance.
    #[arg(long, value_name = "EPS", default_value_t = 1e-9)]
    pub tol: f64,
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match cli.command {
        Command::Solve(args) => run_solve(&args, out, err),
        Command::Sensitivity(args) => run_sensitivity(&args, out, err),
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Infeasible => EXIT_INFEASIBLE,
        Error::Unbounded | Error::UnboundedRegion(_) => EXIT_UNBOUNDED,
        Error::DegenerateOptimum { .. } => EXIT_DEGENERATE,
        _ => EXIT_INPUT,
    }
}

fn load(path: &std::path::Path) -> Result<LinearProgram2D, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let lp = parse_lp(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    lp.validate().map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(lp)
}

fn tolerances(tol: f64) -> Result<Tolerances, String> {
    if !tol.is_finite() || tol < 0.0 {
        return Err(format!("--tol must be a finite nonnegative number, got {tol}"));
    }
    Ok(Tolerances { feasibility: tol, ..Tolerances::default() })
}

pub fn run_solve(args: &SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let (lp, tol) = match load(&args.file).and_then(|lp| Ok((lp, tolerances(args.tol)?))) {
        Ok(v) => v,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_INPUT;
        }
    };
    let method = Method::from(args.solver);
    match method.solve(&lp, &tol) {
        Ok(sol) => {
            let _ = write!(out, "{}", render_solution(&sol, method));
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn run_sensitivity(args: &SensitivityArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let (lp, tol) = match load(&args.file).and_then(|lp| Ok((lp, tolerances(args.tol)?))) {
        Ok(v) => v,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_INPUT;
        }
    };
    if let Some(step) = args.check_sweep {
        if !step.is_finite() || step <= 0.0 {
            let _ = writeln!(err, "error: --check-sweep needs a positive step in degrees");
            return EXIT_INPUT;
        }
    }
    let unit = if args.radians { AngleUnit::Radians } else { AngleUnit::Degrees };

    let report = match analyze_with(&lp, &tol) {
        Ok(r) => r,
        Err(e) => {
            if let Error::DegenerateOptimum { tied, phi } = &e {
                let points: Vec<String> = tied.iter().map(|p| fmt_point(*p)).collect();
                if args.json {
                    let doc = serde_json::json!({
                        "schema_version": SCHEMA_VERSION,
                        "error": "degenerate_optimum",
                        "tied": tied,
                        "phi": phi,
                    });
                    let _ = writeln!(out, "{doc}");
                } else {
                    let _ = writeln!(out, "degenerate optimum: tied vertices {}", points.join(", "));
                    let _ = writeln!(out, "stable directions collapse to phi = {}", unit.fmt(*phi));
                }
            }
            let _ = writeln!(err, "error: {e}");
            return exit_code(&e);
        }
    };

    let oracle = match args.check_sweep {
        Some(step) => match certify(&report, Angle::from_degrees(step)) {
            Ok(check) => Some(check),
            Err(e) => {
                let _ = writeln!(err, "error: sweep oracle failed: {e}");
                return EXIT_ORACLE;
            }
        },
        None => None,
    };
    let doc = ReportDocument {
        schema_version: SCHEMA_VERSION,
        input: args.file.display().to_string(),
        tolerance: tol.feasibility,
        solver: Method::Enumeration,
        clipped_interval: args.clip_first_quadrant.then(|| report.interval.clip_first_quadrant()),
        report,
        oracle,
    };

    if let Some(path) = &args.svg {
        if let Err(e) = emit_svg(&doc.report, path) {
            let _ = writeln!(err, "error: {}: {e}", path.display());
            return EXIT_INPUT;
        }
    }

    if args.json {
        match serde_json::to_string_pretty(&doc) {
            Ok(s) => {
                let _ = writeln!(out, "{s}");
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_INPUT;
            }
        }
    } else {
        let _ = write!(out, "{}", render_report(&doc, unit));
    }

    match &doc.oracle {
        Some(check) if !check.passed => {
            let _ = writeln!(
                err,
                "error: sweep oracle disagrees by {:.6} deg (tolerance {:.6} deg)",
                check.max_endpoint_error.degrees(),
                check.tolerance.degrees()
            );
            EXIT_ORACLE
        }
        _ => EXIT_OK,
    }
}
