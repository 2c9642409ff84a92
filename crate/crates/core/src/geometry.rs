//! Planar primitives: vectors, angles, rotations and lines through the origin.
//!
//! All angles are stored in radians. Degrees only appear at the
//! presentation layer ([`Angle::degrees`], [`Angle::from_degrees`]).

use std::f64::consts::{PI, TAU};
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute slack for pure algebraic identities.
pub const IDENTITY_TOL: f64 = 1e-12;
/// Slack for composed geometric predicates.
pub const GEOMETRIC_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Vec2 {
    pub x1: f64,
    pub x2: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x1: 0.0, x2: 0.0 };

    pub const fn new(x1: f64, x2: f64) -> Self {
        Vec2 { x1, x2 }
    }

    pub fn is_finite(self) -> bool {
        self.x1.is_finite() && self.x2.is_finite()
    }

    pub fn is_zero(self) -> bool {
        self.x1 == 0.0 && self.x2 == 0.0
    }

    pub fn dot(self, other: Vec2) -> f64 {
        self.x1 * other.x1 + self.x2 * other.x2
    }

    /// z-component of the 3D cross product; positive when `other` is
    /// counterclockwise from `self`.
    pub fn cross(self, other: Vec2) -> f64 {
        self.x1 * other.x2 - self.x2 * other.x1
    }

    pub fn norm(self) -> f64 {
        self.x1.hypot(self.x2)
    }

    pub fn distance(self, other: Vec2) -> f64 {
        (self - other).norm()
    }

    /// Polar angle in (-pi, pi]; zero for the zero vector.
    pub fn angle(self) -> Angle {
        // `+ 0.0` folds -0.0 into +0.0 so atan2 never returns -pi.
        Angle(f64::atan2(self.x2 + 0.0, self.x1 + 0.0))
    }

    /// Counterclockwise quarter turn.
    pub fn perp(self) -> Vec2 {
        Vec2::new(-self.x2, self.x1)
    }

    pub fn unit(angle: Angle) -> Vec2 {
        let (s, c) = angle.0.sin_cos();
        Vec2::new(c, s)
    }

    pub fn abs(self) -> Vec2 {
        Vec2::new(self.x1.abs(), self.x2.abs())
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x1 + rhs.x1, self.x2 + rhs.x2)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x1 - rhs.x1, self.x2 - rhs.x2)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x1, -self.x2)
    }
}

impl Mul<Vec2> for f64 {
    type Output = Vec2;
    fn mul(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self * rhs.x1, self * rhs.x2)
    }
}

impl From<(f64, f64)> for Vec2 {
    fn from((x1, x2): (f64, f64)) -> Self {
        Vec2::new(x1, x2)
    }
}

/// An angle in radians. Range contracts belong to the producer.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Angle(pub f64);

impl Angle {
    pub const ZERO: Angle = Angle(0.0);

    pub fn from_degrees(deg: f64) -> Self {
        Angle(deg.to_radians())
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    pub fn degrees(self) -> f64 {
        self.0.to_degrees()
    }

    /// Equivalent angle in (-pi, pi].
    pub fn wrapped(self) -> Angle {
        let mut a = self.0.rem_euclid(TAU);
        if a > PI {
            a -= TAU;
        }
        Angle(a)
    }
}

impl Add for Angle {
    type Output = Angle;
    fn add(self, rhs: Angle) -> Angle {
        Angle(self.0 + rhs.0)
    }
}

impl Sub for Angle {
    type Output = Angle;
    fn sub(self, rhs: Angle) -> Angle {
        Angle(self.0 - rhs.0)
    }
}

impl Neg for Angle {
    type Output = Angle;
    fn neg(self) -> Angle {
        Angle(-self.0)
    }
}

/// Counterclockwise rotation matrix `[[cos, -sin], [sin, cos]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation {
    cos: f64,
    sin: f64,
}

impl Rotation {
    pub fn matrix(&self) -> [[f64; 2]; 2] {
        [[self.cos, -self.sin], [self.sin, self.cos]]
    }

    pub fn transpose(&self) -> Rotation {
        Rotation { cos: self.cos, sin: -self.sin }
    }

    pub fn determinant(&self) -> f64 {
        self.cos * self.cos + self.sin * self.sin
    }

    pub fn apply(&self, v: Vec2) -> Vec2 {
        Vec2::new(self.cos * v.x1 - self.sin * v.x2, self.sin * v.x1 + self.cos * v.x2)
    }

    pub fn compose(&self, other: &Rotation) -> Rotation {
        Rotation { cos: self.cos * other.cos - self.sin * other.sin, sin: self.sin * other.cos + self.cos * other.sin }
    }
}

pub fn rotation_of(theta: Angle) -> Rotation {
    let (sin, cos) = theta.0.sin_cos();
    Rotation { cos, sin }
}

pub fn apply_rotation(rot: &Rotation, v: Vec2) -> Vec2 {
    rot.apply(v)
}

/// The line `{x : <normal, x> = 0}`. Its direction is derived from the
/// normal, so the two are orthogonal by construction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LineThroughOrigin {
    normal: Vec2,
}

impl LineThroughOrigin {
    pub fn new(normal: Vec2) -> Result<Self> {
        if normal.is_zero() || !normal.is_finite() {
            return Err(Error::ZeroVector);
        }
        Ok(LineThroughOrigin { normal })
    }

    pub fn normal(&self) -> Vec2 {
        self.normal
    }

    /// `(-c2, c1)` for normal `(c1, c2)`.
    pub fn direction(&self) -> Vec2 {
        self.normal.perp()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolarVector {
    pub r: f64,
    /// In (-pi, pi].
    pub phi: Angle,
}

impl PolarVector {
    pub fn to_cartesian(self) -> Vec2 {
        self.r * Vec2::unit(self.phi)
    }
}

pub fn polar_of(v: Vec2) -> PolarVector {
    PolarVector { r: v.norm(), phi: v.angle() }
}

/// Direction angle in (0, pi] of the line spanned by `v`.
///
/// Of `v` and `-v`, picks the one in the closed upper half-plane; a
/// horizontal direction maps to pi rather than 0.
pub fn line_direction_angle(v: Vec2) -> Result<Angle> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let a = v.angle().0;
    Ok(Angle(if a <= 0.0 { a + PI } else { a }))
}

/// Orthogonal projection of `x` onto `d`.
pub fn project_onto_line(x: Vec2, d: &LineThroughOrigin) -> Vec2 {
    let c = d.normal;
    x - (x.dot(c) / c.dot(c)) * c
}

/// `|<x, c>| / |c|`, the length of `x - P(x)`.
pub fn distance_to_line(x: Vec2, d: &LineThroughOrigin) -> f64 {
    x.dot(d.normal).abs() / d.normal.norm()
}

/// Unsigned angle in [0, pi] between two nonzero vectors.
pub fn angle_between(u: Vec2, v: Vec2) -> Result<Angle> {
    if u.is_zero() || v.is_zero() {
        return Err(Error::ZeroVector);
    }
    // atan2 of |cross| and dot is accurate near 0 and pi, unlike acos.
    Ok(Angle(f64::atan2(u.cross(v).abs(), u.dot(v))))
}
