//! Planar primitives: points, segments, circumscribing-disk centers, line
//! angles and the circular-cap and arc formulas used by the estimators.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance, in length units, for every geometric equality test.
pub const EPS_GEOM: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn ensure_finite(self) -> Result<Self> {
        if self.is_finite() {
            Ok(self)
        } else {
            Err(Error::NonFinite(self))
        }
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn norm_sq(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    #[inline]
    pub fn dist(self, other: Point2) -> f64 {
        (self - other).norm()
    }

    #[inline]
    pub fn dist_sq(self, other: Point2) -> f64 {
        (self - other).norm_sq()
    }

    #[inline]
    pub fn dot(self, other: Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    #[inline]
    pub fn cross(self, other: Point2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    /// Counter-clockwise quarter turn.
    #[inline]
    pub fn perp(self) -> Point2 {
        Point2::new(-self.y, self.x)
    }

    /// Counter-clockwise rotation by `theta` radians.
    #[inline]
    pub fn rotate(self, theta: f64) -> Point2 {
        let (s, c) = theta.sin_cos();
        Point2::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn normalized(self) -> Result<Point2> {
        let n = self.norm();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::ZeroDirection);
        }
        Ok(self * (1.0 / n))
    }

    #[inline]
    pub fn midpoint(self, other: Point2) -> Point2 {
        Point2::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }

    #[inline]
    pub fn lerp(self, other: Point2, t: f64) -> Point2 {
        self + (other - self) * t
    }
}

impl Add for Point2 {
    type Output = Point2;
    #[inline]
    fn add(self, rhs: Point2) -> Point2 {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    #[inline]
    fn sub(self, rhs: Point2) -> Point2 {
        Point2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    #[inline]
    fn mul(self, rhs: f64) -> Point2 {
        Point2::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    #[inline]
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

impl From<(f64, f64)> for Point2 {
    fn from((x, y): (f64, f64)) -> Self {
        Point2::new(x, y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub a: Point2,
    pub b: Point2,
}

impl Segment {
    pub fn new(a: Point2, b: Point2) -> Self {
        Segment { a, b }
    }

    pub fn length(&self) -> f64 {
        self.a.dist(self.b)
    }

    pub fn direction(&self) -> Point2 {
        self.b - self.a
    }

    pub fn midpoint(&self) -> Point2 {
        self.a.midpoint(self.b)
    }

    /// Point at parameter `t` in `[0, 1]` along the segment.
    pub fn at(&self, t: f64) -> Point2 {
        self.a.lerp(self.b, t)
    }

    /// Euclidean distance from `p` to the closed segment.
    pub fn distance_to(&self, p: Point2) -> f64 {
        let d = self.b - self.a;
        let len_sq = d.norm_sq();
        if len_sq == 0.0 {
            return p.dist(self.a);
        }
        let t = ((p - self.a).dot(d) / len_sq).clamp(0.0, 1.0);
        p.dist(self.a + d * t)
    }
}

/// The two centers of the radius-alpha circles through a chord's endpoints.
///
/// `plus` lies to the left of the directed chord `a -> b`, `minus` to the
/// right. When the chord is a diameter the two coincide and `degenerate` is
/// set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskCenterPair {
    pub plus: Point2,
    pub minus: Point2,
    pub degenerate: bool,
}

/// Centers of the radius-`alpha` circles passing through `a` and `b`.
///
/// Chords within [`EPS_GEOM`] of `2 * alpha` are accepted and reported as
/// degenerate with both centers at the midpoint.
pub fn disk_centers(a: Point2, b: Point2, alpha: f64) -> Result<DiskCenterPair> {
    a.ensure_finite()?;
    b.ensure_finite()?;
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::InvalidAlpha(alpha));
    }
    let chord = b - a;
    let length = chord.norm();
    if length == 0.0 {
        return Err(Error::CoincidentPoints { a, b });
    }
    let diameter = 2.0 * alpha;
    if length > diameter + EPS_GEOM {
        return Err(Error::ChordTooLong { length, alpha });
    }
    let mid = a.midpoint(b);
    if (diameter - length).abs() <= EPS_GEOM {
        return Ok(DiskCenterPair {
            plus: mid,
            minus: mid,
            degenerate: true,
        });
    }
    let half = 0.5 * length;
    // (alpha - half)(alpha + half) keeps precision when the chord is near 2 alpha.
    let offset = ((alpha - half) * (alpha + half)).sqrt();
    let normal = chord.perp() * (offset / length);
    Ok(DiskCenterPair {
        plus: mid + normal,
        minus: mid - normal,
        degenerate: false,
    })
}

/// Acute angle in `[0, pi/2]` between the undirected lines spanned by `u`
/// and `v`.
pub fn angle_between_lines(u: Point2, v: Point2) -> Result<f64> {
    u.ensure_finite()?;
    v.ensure_finite()?;
    let nu = u.norm();
    let nv = v.norm();
    if nu == 0.0 || nv == 0.0 {
        return Err(Error::ZeroDirection);
    }
    // atan2 of |cross| and |dot| is stable at both ends of the range.
    let cross = u.cross(v).abs() / (nu * nv);
    let dot = u.dot(v).abs() / (nu * nv);
    Ok(cross.atan2(dot))
}

/// Area of the circular cap of a radius-`alpha` disk cut off at height `h`.
pub fn cap_area(alpha: f64, h: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::InvalidAlpha(alpha));
    }
    if !(0.0..=2.0 * alpha).contains(&h) {
        return Err(Error::CapHeightOutOfRange { alpha, h });
    }
    let c = (1.0 - h / alpha).clamp(-1.0, 1.0);
    let chord_half = (h * (2.0 * alpha - h)).max(0.0).sqrt();
    Ok(alpha * alpha * c.acos() - (alpha - h) * chord_half)
}

/// Length of the minor arc of a radius-`alpha` circle over a chord of length
/// `ell`.
pub fn arc_length_for_chord(alpha: f64, ell: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::InvalidAlpha(alpha));
    }
    if ell < 0.0 || ell > 2.0 * alpha + EPS_GEOM || !ell.is_finite() {
        return Err(Error::ChordTooLong { length: ell, alpha });
    }
    let s = (ell / (2.0 * alpha)).min(1.0);
    if s == 1.0 {
        return Ok(PI * alpha);
    }
    Ok(2.0 * alpha * s.asin())
}
