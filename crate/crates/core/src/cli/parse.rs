//! The plain-text LP format.
//!
//! ```text
//! # comment
//! maximize: 2 3
//! constraints:
//! 1/4 1/2 40     # a1 a2 b  means  a1*x1 + a2*x2 <= b
//! ```
//!
//! Numbers are decimals or fractions `p/q`. `x >= 0` is implicit.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::geometry::Vec2;
use crate::model::{ConstraintRow, LinearProgram2D};

fn syntax(line: usize, reason: impl Into<String>) -> Error {
    Error::Syntax { line, reason: reason.into() }
}

fn parse_number(tok: &str, line: usize) -> Result<f64> {
    let value = match tok.split_once('/') {
        Some((p, q)) => {
            let p: f64 = p.parse().map_err(|_| syntax(line, format!("bad numerator in `{tok}`")))?;
            let q: f64 = q.parse().map_err(|_| syntax(line, format!("bad denominator in `{tok}`")))?;
            if q == 0.0 {
                return Err(syntax(line, format!("zero denominator in `{tok}`")));
            }
            p / q
        }
        None => tok.parse().map_err(|_| syntax(line, format!("`{tok}` is not a number")))?,
    };
    if !value.is_finite() {
        return Err(syntax(line, format!("`{tok}` is not finite")));
    }
    Ok(value)
}

fn parse_numbers<const N: usize>(rest: &str, line: usize) -> Result<[f64; N]> {
    let toks: Vec<&str> = rest.split_whitespace().collect();
    if toks.len() != N {
        return Err(syntax(line, format!("expected {N} numbers, found {}", toks.len())));
    }
    let mut out = [0.0; N];
    for (slot, tok) in out.iter_mut().zip(toks) {
        *slot = parse_number(tok, line)?;
    }
    Ok(out)
}

pub fn parse_lp(text: &str) -> Result<LinearProgram2D> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (n, first) = lines.next().ok_or(Error::MissingObjective)?;
    let Some(rest) = first.strip_prefix("maximize:") else {
        return Err(if first.starts_with("constraints:") {
            Error::MissingObjective
        } else {
            syntax(n, "expected `maximize: <c1> <c2>`")
        });
    };
    let [c1, c2] = parse_numbers::<2>(rest, n)?;

    match lines.next() {
        None => return Err(Error::NoConstraints),
        Some((_, "constraints:")) => {}
        Some((n, _)) => return Err(syntax(n, "expected `constraints:`")),
    }

    let rows = lines
        .map(|(n, l)| parse_numbers::<3>(l, n).map(|[a1, a2, b]| ConstraintRow::new(a1, a2, b)))
        .collect::<Result<Vec<_>>>()?;
    if rows.is_empty() {
        return Err(Error::NoConstraints);
    }
    Ok(LinearProgram2D::new(Vec2::new(c1, c2), rows))
}

/// Writes `lp` so that [`parse_lp`] reads back identical values.
pub fn serialize_lp(lp: &LinearProgram2D) -> String {
    // `{:?}` prints the shortest string that round-trips, with exponents for
    // extreme magnitudes.
    let mut out = format!("maximize: {:?} {:?}\nconstraints:\n", lp.objective.x1, lp.objective.x2);
    for r in &lp.constraints {
        let _ = writeln!(out, "{:?} {:?} {:?}", r.a1, r.a2, r.b);
    }
    out
}
