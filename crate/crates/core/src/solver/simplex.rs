//! Dense two-phase tableau simplex with Bland's rule.
//!
//! Columns are `x1, x2`, one slack per row, then one artificial per row
//! whose right-hand side is negative. Phase one runs only when artificials
//! exist.

use crate::error::{Error, Result};
use crate::geometry::Vec2;
use crate::model::{LinearProgram2D, Tolerances, Vertex};

use super::{tangent_cone_is_strict, Solution};

const PIVOT_EPS: f64 = 1e-9;

struct Tableau {
    /// `m` rows of `ncols + 1` entries; the last entry is the right-hand side.
    rows: Vec<Vec<f64>>,
    basis: Vec<usize>,
    ncols: usize,
    /// Columns barred from entering the basis.
    banned: Vec<bool>,
}

enum Outcome {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn rhs(&self, i: usize) -> f64 {
        self.rows[i][self.ncols]
    }

    /// Reduced-cost row for `max cost·x`: entry j is `c_B B^-1 A_j - c_j`,
    /// last entry the current objective value.
    fn price(&self, cost: &[f64]) -> Vec<f64> {
        let mut z: Vec<f64> = (0..=self.ncols).map(|j| if j < self.ncols { -cost[j] } else { 0.0 }).collect();
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            if cost[b] != 0.0 {
                for (zj, aij) in z.iter_mut().zip(row) {
                    *zj += cost[b] * aij;
                }
            }
        }
        z
    }

    fn pivot(&mut self, r: usize, col: usize, z: &mut [f64]) {
        let p = self.rows[r][col];
        for v in self.rows[r].iter_mut() {
            *v /= p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r && row[col] != 0.0 {
                let f = row[col];
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= f * pv;
                }
                row[col] = 0.0;
            }
        }
        let f = z[col];
        if f != 0.0 {
            for (v, pv) in z.iter_mut().zip(&pivot_row) {
                *v -= f * pv;
            }
            z[col] = 0.0;
        }
        self.basis[r] = col;
    }

    fn iterate(&mut self, cost: &[f64]) -> (Outcome, Vec<f64>) {
        let mut z = self.price(cost);
        let cscale = cost.iter().fold(1f64, |m, c| m.max(c.abs()));
        loop {
            // Bland: lowest-index improving column, lowest-index basic on ratio ties.
            let Some(col) = (0..self.ncols).find(|&j| !self.banned[j] && z[j] < -PIVOT_EPS * cscale) else {
                return (Outcome::Optimal, z);
            };
            let mut leave: Option<(usize, f64)> = None;
            for i in 0..self.rows.len() {
                let a = self.rows[i][col];
                if a > PIVOT_EPS {
                    let ratio = self.rhs(i).max(0.0) / a;
                    leave = match leave {
                        None => Some((i, ratio)),
                        Some((k, best)) => {
                            let tie = (ratio - best).abs() <= 1e-12 * best.abs().max(1.0);
                            if ratio < best && !tie || tie && self.basis[i] < self.basis[k] {
                                Some((i, ratio))
                            } else {
                                Some((k, best))
                            }
                        }
                    };
                }
            }
            match leave {
                None => return (Outcome::Unbounded, z),
                Some((r, _)) => self.pivot(r, col, &mut z),
            }
        }
    }
}

pub fn solve_simplex(lp: &LinearProgram2D) -> Result<Solution> {
    solve_simplex_with(lp, &Tolerances::default())
}

pub fn solve_simplex_with(lp: &LinearProgram2D, tol: &Tolerances) -> Result<Solution> {
    lp.validate_for_solve()?;
    let m = lp.constraints.len();
    let negatives: Vec<usize> = (0..m).filter(|&i| lp.constraints[i].b < 0.0).collect();
    let n_art = negatives.len();
    let ncols = 2 + m + n_art;

    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    for (i, c) in lp.constraints.iter().enumerate() {
        let mut row = vec![0.0; ncols + 1];
        row[0] = c.a1;
        row[1] = c.a2;
        row[2 + i] = 1.0;
        row[ncols] = c.b;
        match negatives.iter().position(|&k| k == i) {
            Some(k) => {
                for v in row.iter_mut() {
                    *v = -*v;
                }
                row[2 + m + k] = 1.0;
                basis.push(2 + m + k);
            }
            None => basis.push(2 + i),
        }
        rows.push(row);
    }
    let mut t = Tableau { rows, basis, ncols, banned: vec![false; ncols] };

    if n_art > 0 {
        let mut cost = vec![0.0; ncols];
        for c in &mut cost[2 + m..] {
            *c = -1.0;
        }
        let (_, z) = t.iterate(&cost);
        let bscale = lp.constraints.iter().fold(1f64, |s, r| s.max(r.b.abs()));
        if z[ncols] < -tol.feasibility * bscale {
            return Err(Error::Infeasible);
        }
        // Pivot zero-level artificials out of the basis; drop redundant rows.
        let mut r = 0;
        while r < t.rows.len() {
            if t.basis[r] >= 2 + m {
                let mut dummy = vec![0.0; ncols + 1];
                match (0..2 + m).find(|&j| t.rows[r][j].abs() > PIVOT_EPS) {
                    Some(col) => t.pivot(r, col, &mut dummy),
                    None => {
                        t.rows.remove(r);
                        t.basis.remove(r);
                        continue;
                    }
                }
            }
            r += 1;
        }
        for b in &mut t.banned[2 + m..] {
            *b = true;
        }
    }

    let mut cost = vec![0.0; ncols];
    cost[0] = lp.objective.x1;
    cost[1] = lp.objective.x2;
    let (outcome, _) = t.iterate(&cost);
    if let Outcome::Unbounded = outcome {
        return Err(Error::Unbounded);
    }

    let mut x = [0.0f64; 2];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < 2 {
            x[b] = t.rhs(i).max(0.0);
        }
    }
    let point = Vec2::new(x[0], x[1]);
    let active =
        lp.all_rows().filter(|(_, row)| (row.lhs(point) - row.b).abs() <= 1e-7 * row.scale()).map(|(id, _)| id);
    let vertex = Vertex::new(point, active);
    let unique = tangent_cone_is_strict(lp, &vertex, tol.tie);
    Ok(Solution { value: lp.evaluate(point), vertex, unique, tied_with: Vec::new() })
}
