//! Reduction of an arbitrary-sign objective to the nonnegative case.
//!
//! A rotation `R` applied to both the region and the gradient leaves every
//! objective value unchanged, since `(Rc)·(Rx) = c·x`. Picking `R` so that
//! `Rc = (|c1|, |c2|)` gives a nonnegative gradient; a translation along
//! that gradient then moves the region into the first quadrant without
//! changing the argmax or any edge direction.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{rotation_of, Angle, Vec2};
use crate::model::FeasibleRegion;

/// How the translation step was carried out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TranslationMode {
    /// Region already in the first quadrant.
    None,
    /// Offset `alpha * c_rotated`.
    AlongObjective,
    /// `c_rotated` has a zero component, so the offset is `alpha * (1, 1)`.
    AlongDiagonal,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormalizedProblem {
    pub region: FeasibleRegion,
    /// Componentwise nonnegative, same norm as the input gradient.
    pub objective: Vec2,
    pub theta0: Angle,
    pub translation: Vec2,
    pub mode: TranslationMode,
}

/// The rotation taking `c` to `(|c1|, |c2|)`, in (-pi, pi].
pub fn normalizing_rotation(c: Vec2) -> Result<Angle> {
    if c.is_zero() {
        return Err(Error::ZeroObjective);
    }
    Ok((c.abs().angle() - c.angle()).wrapped())
}

pub fn rotate_problem(region: &FeasibleRegion, c: Vec2, theta: Angle) -> (FeasibleRegion, Vec2) {
    let rot = rotation_of(theta);
    (region.map_points(|p| rot.apply(p)), rot.apply(c))
}

/// Shifts every vertex by `alpha * c_rotated`.
pub fn translate_region(region: &FeasibleRegion, alpha: f64, c_rotated: Vec2) -> Result<(FeasibleRegion, Vec2)> {
    if alpha.is_nan() || alpha <= 0.0 {
        return Err(Error::NonPositiveAlpha(alpha));
    }
    let offset = alpha * c_rotated;
    Ok((region.map_points(|p| p + offset), offset))
}

fn min_coordinate(region: &FeasibleRegion) -> f64 {
    region.points().fold(f64::INFINITY, |m, p| m.min(p.x1).min(p.x2))
}

pub fn normalize(region: &FeasibleRegion, c: Vec2) -> Result<NormalizedProblem> {
    let theta0 = normalizing_rotation(c)?;
    let (rotated, _) = rotate_problem(region, c, theta0);
    // The rotated gradient equals |c| componentwise up to rounding; store the
    // exact target so the sign invariant holds bitwise.
    let objective = c.abs();

    let lowest = min_coordinate(&rotated);
    if lowest >= 0.0 {
        return Ok(NormalizedProblem {
            region: rotated,
            objective,
            theta0,
            translation: Vec2::ZERO,
            mode: TranslationMode::None,
        });
    }
    let need = -lowest + 1.0;
    let (region, translation, mode) = if objective.x1 > 0.0 && objective.x2 > 0.0 {
        let alpha = need / objective.x1.min(objective.x2).min(1.0);
        let (r, t) = translate_region(&rotated, alpha, objective)?;
        (r, t, TranslationMode::AlongObjective)
    } else {
        let (r, t) = translate_region(&rotated, need, Vec2::new(1.0, 1.0))?;
        (r, t, TranslationMode::AlongDiagonal)
    };
    Ok(NormalizedProblem { region, objective, theta0, translation, mode })
}
