//! Analytic planar supports with exact perimeter, membership, uniform
//! sampling and metric projection onto the boundary.
//!
//! Every domain here has a boundary made of circular arcs and straight
//! segments, and both the domain and its complement satisfy a rolling-ball
//! condition whose radius is stored as [`Domain::rolling_r`].

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};
use crate::geom::{Point2, EPS_GEOM};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DomainKind {
    /// Disk of the given radius centered at the origin.
    Disk { radius: f64 },
    /// Ring `inner <= |x| <= outer` centered at the origin.
    Annulus { inner: f64, outer: f64 },
    /// Points within `cap_radius` of the segment `[-half_length, half_length] x {0}`.
    Stadium { half_length: f64, cap_radius: f64 },
    /// Two disjoint closed disks.
    DisjointDisks {
        c1: Point2,
        r1: f64,
        c2: Point2,
        r2: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Domain {
    kind: DomainKind,
    rolling_r: f64,
}

/// A point of the boundary with its local frame. The normal points away
/// from the domain; the tangent is the normal turned a quarter counter-clockwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryPoint {
    pub position: Point2,
    pub outward_normal: Point2,
    pub tangent: Point2,
    pub component_id: usize,
}

impl BoundaryPoint {
    fn new(position: Point2, outward_normal: Point2, component_id: usize) -> Self {
        BoundaryPoint {
            position,
            outward_normal,
            tangent: outward_normal.perp(),
            component_id,
        }
    }
}

/// One closed connected component of the boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryComponent {
    Circle {
        id: usize,
        center: Point2,
        radius: f64,
        /// True when the domain lies inside the circle.
        encloses_domain: bool,
    },
    Stadium {
        id: usize,
        half_length: f64,
        cap_radius: f64,
    },
}

impl BoundaryComponent {
    pub fn id(&self) -> usize {
        match *self {
            BoundaryComponent::Circle { id, .. } | BoundaryComponent::Stadium { id, .. } => id,
        }
    }

    pub fn length(&self) -> f64 {
        match *self {
            BoundaryComponent::Circle { radius, .. } => TAU * radius,
            BoundaryComponent::Stadium {
                half_length,
                cap_radius,
                ..
            } => TAU * cap_radius + 4.0 * half_length,
        }
    }

    /// Boundary point at arc length `s` (taken modulo the component length).
    pub fn point_at(&self, s: f64) -> BoundaryPoint {
        let s = s.rem_euclid(self.length());
        match *self {
            BoundaryComponent::Circle {
                id,
                center,
                radius,
                encloses_domain,
            } => {
                let t = s / radius;
                let radial = Point2::new(t.cos(), t.sin());
                let normal = if encloses_domain { radial } else { -radial };
                BoundaryPoint::new(center + radial * radius, normal, id)
            }
            BoundaryComponent::Stadium {
                id,
                half_length: l,
                cap_radius: rho,
            } => {
                // Right cap, top side, left cap, bottom side.
                let cap = PI * rho;
                let side = 2.0 * l;
                let (core, normal) = if s < cap {
                    let t = -PI / 2.0 + s / rho;
                    (Point2::new(l, 0.0), Point2::new(t.cos(), t.sin()))
                } else if s < cap + side {
                    (Point2::new(l - (s - cap), 0.0), Point2::new(0.0, 1.0))
                } else if s < 2.0 * cap + side {
                    let t = PI / 2.0 + (s - cap - side) / rho;
                    (Point2::new(-l, 0.0), Point2::new(t.cos(), t.sin()))
                } else {
                    (
                        Point2::new(-l + (s - 2.0 * cap - side), 0.0),
                        Point2::new(0.0, -1.0),
                    )
                };
                BoundaryPoint::new(core + normal * rho, normal, id)
            }
        }
    }

    /// Points spaced at most `1 / per_unit_length` apart along the component.
    pub fn samples(&self, per_unit_length: f64) -> Vec<BoundaryPoint> {
        let len = self.length();
        let count = ((len * per_unit_length).ceil() as usize).max(8);
        (0..count)
            .map(|k| self.point_at(len * k as f64 / count as f64))
            .collect()
    }

    fn project(&self, p: Point2) -> Option<(f64, BoundaryPoint)> {
        match *self {
            BoundaryComponent::Circle {
                id,
                center,
                radius,
                encloses_domain,
            } => {
                let d = p - center;
                let r = d.norm();
                if r <= EPS_GEOM {
                    return None;
                }
                let radial = d * (1.0 / r);
                let normal = if encloses_domain { radial } else { -radial };
                Some((
                    (r - radius).abs(),
                    BoundaryPoint::new(center + radial * radius, normal, id),
                ))
            }
            BoundaryComponent::Stadium {
                id,
                half_length,
                cap_radius,
            } => {
                let core = Point2::new(p.x.clamp(-half_length, half_length), 0.0);
                let d = p - core;
                let r = d.norm();
                if r <= EPS_GEOM {
                    return None;
                }
                let normal = d * (1.0 / r);
                Some((
                    (r - cap_radius).abs(),
                    BoundaryPoint::new(core + normal * cap_radius, normal, id),
                ))
            }
        }
    }

    fn distance(&self, p: Point2) -> f64 {
        match *self {
            BoundaryComponent::Circle { center, radius, .. } => (p.dist(center) - radius).abs(),
            BoundaryComponent::Stadium {
                half_length,
                cap_radius,
                ..
            } => {
                let core = Point2::new(p.x.clamp(-half_length, half_length), 0.0);
                (p.dist(core) - cap_radius).abs()
            }
        }
    }
}

fn positive(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidDomain(format!(
            "{name} must be positive, got {v}"
        )))
    }
}

impl Domain {
    pub fn disk(radius: f64) -> Result<Self> {
        positive("radius", radius)?;
        Ok(Domain {
            kind: DomainKind::Disk { radius },
            rolling_r: radius,
        })
    }

    /// The hole radius bounds the rolling radius, and so does half the ring
    /// width once the ring is thinner than the hole's diameter.
    pub fn annulus(inner: f64, outer: f64) -> Result<Self> {
        positive("inner radius", inner)?;
        positive("outer radius", outer)?;
        if inner >= outer {
            return Err(Error::InvalidDomain(format!(
                "annulus needs inner < outer, got {inner} >= {outer}"
            )));
        }
        Ok(Domain {
            kind: DomainKind::Annulus { inner, outer },
            rolling_r: inner.min(0.5 * (outer - inner)),
        })
    }

    pub fn stadium(half_length: f64, cap_radius: f64) -> Result<Self> {
        if !(half_length >= 0.0 && half_length.is_finite()) {
            return Err(Error::InvalidDomain(format!(
                "half_length must be non-negative, got {half_length}"
            )));
        }
        positive("cap radius", cap_radius)?;
        Ok(Domain {
            kind: DomainKind::Stadium {
                half_length,
                cap_radius,
            },
            rolling_r: cap_radius,
        })
    }

    pub fn disjoint_disks(c1: Point2, r1: f64, c2: Point2, r2: f64) -> Result<Self> {
        c1.ensure_finite()?;
        c2.ensure_finite()?;
        positive("r1", r1)?;
        positive("r2", r2)?;
        let gap = c1.dist(c2) - r1 - r2;
        if gap <= 0.0 {
            return Err(Error::InvalidDomain(format!(
                "disks overlap or touch (gap {gap})"
            )));
        }
        Ok(Domain {
            kind: DomainKind::DisjointDisks { c1, r1, c2, r2 },
            rolling_r: r1.min(r2).min(0.5 * gap),
        })
    }

    pub fn kind(&self) -> DomainKind {
        self.kind
    }

    /// Largest radius for which both the domain and its complement satisfy
    /// the rolling-ball condition.
    pub fn rolling_r(&self) -> f64 {
        self.rolling_r
    }

    pub fn components(&self) -> Vec<BoundaryComponent> {
        match self.kind {
            DomainKind::Disk { radius } => vec![BoundaryComponent::Circle {
                id: 0,
                center: Point2::ORIGIN,
                radius,
                encloses_domain: true,
            }],
            DomainKind::Annulus { inner, outer } => vec![
                BoundaryComponent::Circle {
                    id: 0,
                    center: Point2::ORIGIN,
                    radius: inner,
                    encloses_domain: false,
                },
                BoundaryComponent::Circle {
                    id: 1,
                    center: Point2::ORIGIN,
                    radius: outer,
                    encloses_domain: true,
                },
            ],
            DomainKind::Stadium {
                half_length,
                cap_radius,
            } => vec![BoundaryComponent::Stadium {
                id: 0,
                half_length,
                cap_radius,
            }],
            DomainKind::DisjointDisks { c1, r1, c2, r2 } => vec![
                BoundaryComponent::Circle {
                    id: 0,
                    center: c1,
                    radius: r1,
                    encloses_domain: true,
                },
                BoundaryComponent::Circle {
                    id: 1,
                    center: c2,
                    radius: r2,
                    encloses_domain: true,
                },
            ],
        }
    }

    pub fn component_count(&self) -> usize {
        match self.kind {
            DomainKind::Disk { .. } | DomainKind::Stadium { .. } => 1,
            DomainKind::Annulus { .. } | DomainKind::DisjointDisks { .. } => 2,
        }
    }

    /// Closed-set membership; boundary points belong to the domain.
    pub fn contains(&self, p: Point2) -> bool {
        match self.kind {
            DomainKind::Disk { radius } => p.norm() <= radius,
            DomainKind::Annulus { inner, outer } => {
                let r = p.norm();
                inner <= r && r <= outer
            }
            DomainKind::Stadium {
                half_length,
                cap_radius,
            } => {
                let core = Point2::new(p.x.clamp(-half_length, half_length), 0.0);
                p.dist(core) <= cap_radius
            }
            DomainKind::DisjointDisks { c1, r1, c2, r2 } => p.dist(c1) <= r1 || p.dist(c2) <= r2,
        }
    }

    pub fn exact_perimeter(&self) -> f64 {
        match self.kind {
            DomainKind::Disk { radius } => TAU * radius,
            DomainKind::Annulus { inner, outer } => TAU * (inner + outer),
            DomainKind::Stadium {
                half_length,
                cap_radius,
            } => TAU * cap_radius + 4.0 * half_length,
            DomainKind::DisjointDisks { r1, r2, .. } => TAU * (r1 + r2),
        }
    }

    pub fn area(&self) -> f64 {
        match self.kind {
            DomainKind::Disk { radius } => PI * radius * radius,
            DomainKind::Annulus { inner, outer } => PI * (outer * outer - inner * inner),
            DomainKind::Stadium {
                half_length,
                cap_radius,
            } => 4.0 * half_length * cap_radius + PI * cap_radius * cap_radius,
            DomainKind::DisjointDisks { r1, r2, .. } => PI * (r1 * r1 + r2 * r2),
        }
    }

    /// Axis-aligned bounding box as `(min, max)`.
    pub fn bounding_box(&self) -> (Point2, Point2) {
        match self.kind {
            DomainKind::Disk { radius: r } | DomainKind::Annulus { outer: r, .. } => {
                (Point2::new(-r, -r), Point2::new(r, r))
            }
            DomainKind::Stadium {
                half_length,
                cap_radius,
            } => (
                Point2::new(-half_length - cap_radius, -cap_radius),
                Point2::new(half_length + cap_radius, cap_radius),
            ),
            DomainKind::DisjointDisks { c1, r1, c2, r2 } => (
                Point2::new((c1.x - r1).min(c2.x - r2), (c1.y - r1).min(c2.y - r2)),
                Point2::new((c1.x + r1).max(c2.x + r2), (c1.y + r1).max(c2.y + r2)),
            ),
        }
    }

    /// `n` independent uniform draws from the domain.
    pub fn sample_uniform<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Vec<Point2> {
        (0..n).map(|_| self.sample_one(rng)).collect()
    }

    fn sample_one<R: Rng + ?Sized>(&self, rng: &mut R) -> Point2 {
        match self.kind {
            DomainKind::Disk { radius } => uniform_in_disk(rng, Point2::ORIGIN, 0.0, radius),
            DomainKind::Annulus { inner, outer } => {
                uniform_in_disk(rng, Point2::ORIGIN, inner, outer)
            }
            DomainKind::Stadium {
                half_length,
                cap_radius,
            } => {
                let rect = 4.0 * half_length * cap_radius;
                let total = rect + PI * cap_radius * cap_radius;
                if rng.random::<f64>() * total < rect {
                    let x = half_length * (2.0 * rng.random::<f64>() - 1.0);
                    let y = cap_radius * (2.0 * rng.random::<f64>() - 1.0);
                    Point2::new(x, y)
                } else {
                    // Each half of a cap disk goes to the matching end.
                    let p = uniform_in_disk(rng, Point2::ORIGIN, 0.0, cap_radius);
                    let shift = if p.x >= 0.0 {
                        half_length
                    } else {
                        -half_length
                    };
                    Point2::new(p.x + shift, p.y)
                }
            }
            DomainKind::DisjointDisks { c1, r1, c2, r2 } => {
                let w1 = r1 * r1;
                if rng.random::<f64>() * (w1 + r2 * r2) < w1 {
                    uniform_in_disk(rng, c1, 0.0, r1)
                } else {
                    uniform_in_disk(rng, c2, 0.0, r2)
                }
            }
        }
    }

    /// Nearest boundary point with its frame. Fails when two boundary points
    /// are equally near, up to [`EPS_GEOM`].
    pub fn project_to_boundary(&self, p: Point2) -> Result<BoundaryPoint> {
        p.ensure_finite()?;
        let mut best: Option<(f64, BoundaryPoint)> = None;
        let mut runner_up = f64::INFINITY;
        for comp in self.components() {
            let Some((d, bp)) = comp.project(p) else {
                return Err(Error::AmbiguousProjection(p));
            };
            match best {
                Some((bd, _)) if d >= bd => runner_up = runner_up.min(d),
                Some((bd, _)) => {
                    runner_up = bd;
                    best = Some((d, bp));
                }
                None => best = Some((d, bp)),
            }
        }
        let (d, bp) = best.expect("every domain has a boundary component");
        if runner_up - d <= EPS_GEOM {
            return Err(Error::AmbiguousProjection(p));
        }
        Ok(bp)
    }

    pub fn distance_to_boundary(&self, p: Point2) -> f64 {
        self.components()
            .iter()
            .map(|c| c.distance(p))
            .fold(f64::INFINITY, f64::min)
    }
}

fn uniform_in_disk<R: Rng + ?Sized>(rng: &mut R, center: Point2, inner: f64, outer: f64) -> Point2 {
    let u: f64 = rng.random();
    let r = (u * (outer * outer - inner * inner) + inner * inner).sqrt();
    let t = TAU * rng.random::<f64>();
    center + Point2::new(r * t.cos(), r * t.sin())
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            DomainKind::Disk { radius } => write!(f, "disk:{radius}"),
            DomainKind::Annulus { inner, outer } => write!(f, "annulus:{inner},{outer}"),
            DomainKind::Stadium {
                half_length,
                cap_radius,
            } => write!(f, "stadium:{half_length},{cap_radius}"),
            DomainKind::DisjointDisks { c1, r1, c2, r2 } => write!(
                f,
                "disks:({},{}),{},({},{}),{}",
                c1.x, c1.y, r1, c2.x, c2.y, r2
            ),
        }
    }
}

/// Parses `disk:R`, `annulus:R_IN,R_OUT`, `stadium:HALF_LENGTH,CAP_RADIUS` and
/// `disks:(X1,Y1),R1,(X2,Y2),R2`. Whitespace is ignored.
impl FromStr for Domain {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let fail = |reason: &str| Error::DomainSpec {
            spec: spec.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
        let (name, args) = compact
            .split_once(':')
            .ok_or_else(|| fail("expected KIND:ARGS"))?;
        let numbers = |s: &str, count: usize| -> Result<Vec<f64>> {
            let vals: std::result::Result<Vec<f64>, _> = s.split(',').map(str::parse).collect();
            let vals = vals.map_err(|e| fail(&format!("bad number: {e}")))?;
            if vals.len() != count {
                return Err(fail(&format!(
                    "expected {count} values, got {}",
                    vals.len()
                )));
            }
            Ok(vals)
        };
        match name {
            "disk" => Domain::disk(numbers(args, 1)?[0]),
            "annulus" => {
                let v = numbers(args, 2)?;
                Domain::annulus(v[0], v[1])
            }
            "stadium" => {
                let v = numbers(args, 2)?;
                Domain::stadium(v[0], v[1])
            }
            "disks" => {
                let (c1, rest) = parse_center(args).ok_or_else(|| fail("expected (X1,Y1)"))?;
                let rest = rest
                    .strip_prefix(',')
                    .ok_or_else(|| fail("expected ',' after (X1,Y1)"))?;
                let (r1, rest) = rest.split_once(',').ok_or_else(|| fail("expected R1,"))?;
                let (c2, rest) = parse_center(rest).ok_or_else(|| fail("expected (X2,Y2)"))?;
                let r2 = rest
                    .strip_prefix(',')
                    .ok_or_else(|| fail("expected ',R2'"))?;
                let r1: f64 = r1.parse().map_err(|_| fail("bad R1"))?;
                let r2: f64 = r2.parse().map_err(|_| fail("bad R2"))?;
                Domain::disjoint_disks(c1, r1, c2, r2)
            }
            other => Err(fail(&format!("unknown domain kind {other:?}"))),
        }
    }
}

fn parse_center(s: &str) -> Option<(Point2, &str)> {
    let inner = s.strip_prefix('(')?;
    let (body, rest) = inner.split_once(')')?;
    let (x, y) = body.split_once(',')?;
    Some((Point2::new(x.parse().ok()?, y.parse().ok()?), rest))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::rng_from_seed;

    fn corona() -> Domain {
        Domain::annulus(0.25, 1.0).unwrap()
    }

    #[test]
    fn annulus_membership() {
        let d = corona();
        assert!(d.contains(Point2::new(0.5, 0.0)));
        assert!(!d.contains(Point2::new(0.1, 0.0)));
        assert!(d.contains(Point2::new(0.25, 0.0)));
        assert!(d.contains(Point2::new(0.0, -1.0)));
        assert!(!d.contains(Point2::new(1.0, 0.01)));
    }

    #[test]
    fn perimeters() {
        assert!((corona().exact_perimeter() - 7.853_981_633_974_483).abs() < 1e-12);
        assert!((Domain::disk(1.0).unwrap().exact_perimeter() - TAU).abs() < 1e-15);
        assert!((Domain::stadium(1.0, 0.5).unwrap().exact_perimeter() - (PI + 4.0)).abs() < 1e-15);
        let two = Domain::disjoint_disks(Point2::new(-2.0, 0.0), 1.0, Point2::new(2.0, 0.0), 0.5)
            .unwrap();
        assert!((two.exact_perimeter() - 3.0 * PI).abs() < 1e-15);
    }

    #[test]
    fn rolling_radii() {
        assert_eq!(corona().rolling_r(), 0.25);
        assert_eq!(Domain::annulus(0.5, 1.0).unwrap().rolling_r(), 0.25);
        assert_eq!(Domain::stadium(1.0, 0.5).unwrap().rolling_r(), 0.5);
        let two = Domain::disjoint_disks(Point2::new(-2.0, 0.0), 1.0, Point2::new(2.0, 0.0), 1.0)
            .unwrap();
        assert_eq!(two.rolling_r(), 1.0);
    }

    #[test]
    fn invalid_domains() {
        assert!(Domain::disk(0.0).is_err());
        assert!(Domain::annulus(1.0, 0.5).is_err());
        assert!(Domain::stadium(-1.0, 0.5).is_err());
        assert!(Domain::disjoint_disks(Point2::ORIGIN, 1.0, Point2::new(1.5, 0.0), 1.0).is_err());
    }

    #[test]
    fn projections() {
        let d = corona();
        let bp = d.project_to_boundary(Point2::new(0.5, 0.0)).unwrap();
        assert!(bp.position.dist(Point2::new(0.25, 0.0)) < 1e-15);
        assert!(bp.outward_normal.dist(Point2::new(-1.0, 0.0)) < 1e-15);
        assert_eq!(bp.component_id, 0);
        assert!(bp.tangent.dot(bp.outward_normal).abs() < 1e-15);

        let disk = Domain::disk(1.0).unwrap();
        let bp = disk.project_to_boundary(Point2::new(2.0, 0.0)).unwrap();
        assert_eq!(bp.position, Point2::new(1.0, 0.0));
        assert_eq!(bp.outward_normal, Point2::new(1.0, 0.0));

        assert!(matches!(
            d.project_to_boundary(Point2::new(0.625, 0.0)),
            Err(Error::AmbiguousProjection(_))
        ));
        assert!(matches!(
            disk.project_to_boundary(Point2::ORIGIN),
            Err(Error::AmbiguousProjection(_))
        ));
        let st = Domain::stadium(1.0, 0.5).unwrap();
        assert!(st.project_to_boundary(Point2::new(0.3, 0.0)).is_err());
        let bp = st.project_to_boundary(Point2::new(0.3, 0.2)).unwrap();
        assert!(bp.position.dist(Point2::new(0.3, 0.5)) < 1e-15);
        let bp = st.project_to_boundary(Point2::new(2.0, 0.0)).unwrap();
        assert!(bp.position.dist(Point2::new(1.5, 0.0)) < 1e-15);
    }

    #[test]
    fn distances() {
        let d = corona();
        assert_eq!(d.distance_to_boundary(Point2::ORIGIN), 0.25);
        assert_eq!(
            Domain::disk(1.0)
                .unwrap()
                .distance_to_boundary(Point2::new(3.0, 0.0)),
            2.0
        );
        assert!((d.distance_to_boundary(Point2::new(0.625, 0.0)) - 0.375).abs() < 1e-15);
    }

    #[test]
    fn sampling_basics() {
        let mut rng = rng_from_seed(1);
        assert!(corona().sample_uniform(0, &mut rng).is_empty());

        let disk = Domain::disk(1.0).unwrap();
        let pts = disk.sample_uniform(100_000, &mut rng_from_seed(2));
        let n = pts.len() as f64;
        let (mx, my) = pts.iter().fold((0.0, 0.0), |a, p| (a.0 + p.x, a.1 + p.y));
        assert!((mx / n).abs() < 0.01 && (my / n).abs() < 0.01);

        let pts = corona().sample_uniform(100_000, &mut rng_from_seed(3));
        assert!(pts.iter().all(|&p| corona().contains(p)));
        let frac = pts.iter().filter(|p| p.norm() <= 0.5).count() as f64 / 1e5;
        assert!((frac - 0.2).abs() < 0.01, "{frac}");

        let a = corona().sample_uniform(50, &mut rng_from_seed(9));
        let b = corona().sample_uniform(50, &mut rng_from_seed(9));
        assert_eq!(a, b);
    }

    #[test]
    fn spec_strings_round_trip() {
        for s in [
            "annulus:0.25,1",
            "disk:1",
            "stadium:1,0.5",
            "disks:(-2,0),1,(2,0),1",
        ] {
            let d: Domain = s.parse().unwrap();
            assert_eq!(d.to_string(), s);
        }
        let d: Domain = "annulus: 0.25, 1.0".parse().unwrap();
        assert_eq!(d, corona());
        for bad in [
            "annulus:1",
            "square:1",
            "disk",
            "disks:(0,0),1,(0.5,0),1",
            "disks:0,0,1,3,0,1",
        ] {
            assert!(bad.parse::<Domain>().is_err(), "{bad}");
        }
    }

    #[test]
    fn component_lengths_sum_to_perimeter() {
        for d in [
            corona(),
            Domain::stadium(1.0, 0.5).unwrap(),
            Domain::disjoint_disks(Point2::new(-2.0, 0.0), 1.0, Point2::new(2.0, 0.0), 1.0)
                .unwrap(),
        ] {
            let total: f64 = d.components().iter().map(BoundaryComponent::length).sum();
            assert!((total - d.exact_perimeter()).abs() < 1e-12);
            for c in d.components() {
                for bp in c.samples(50.0) {
                    assert!(d.distance_to_boundary(bp.position) < 1e-12);
                    let inside = bp.position - bp.outward_normal * 1e-6;
                    let outside = bp.position + bp.outward_normal * 1e-6;
                    assert!(d.contains(inside) && !d.contains(outside));
                }
            }
        }
    }
}
