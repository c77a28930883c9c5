//! Alpha-edges of a planar sample and the perimeter estimators built on them.
//!
//! A pair of sample points forms an alpha-edge when some open disk of radius
//! alpha has both points on its boundary and no sample point inside. The
//! alpha-shape perimeter is the total length of those edges; the
//! alpha-convex-hull perimeter replaces each edge by the radius-alpha arc over
//! it.

mod candidates;
pub(crate) mod grid;

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::geom::{arc_length_for_chord, disk_centers, DiskCenterPair, Point2, EPS_GEOM};

use grid::PointGrid;

/// A sample pair lying on the boundary of at least one empty radius-alpha
/// disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaEdge {
    pub i: usize,
    pub j: usize,
    /// Centers computed for the directed chord `points[i] -> points[j]`.
    pub centers: DiskCenterPair,
    pub empty_plus: bool,
    pub empty_minus: bool,
}

impl AlphaEdge {
    pub fn pair(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    pub fn sidedness(&self) -> Result<EdgeSidedness> {
        classify_sidedness(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeSidedness {
    /// Exactly one circumscribing disk is empty.
    pub one_sided: bool,
    /// Both circumscribing disks are empty.
    pub two_sided: bool,
}

/// One-sided when exactly one of the two circumscribing disks is empty. A
/// diameter chord has a single disk and is one-sided whenever it is an edge.
pub fn classify_sidedness(edge: &AlphaEdge) -> Result<EdgeSidedness> {
    if !(edge.empty_plus || edge.empty_minus) {
        return Err(Error::NotAnAlphaEdge {
            i: edge.i,
            j: edge.j,
        });
    }
    let two_sided = !edge.centers.degenerate && edge.empty_plus && edge.empty_minus;
    Ok(EdgeSidedness {
        one_sided: !two_sided,
        two_sided,
    })
}

/// The alpha-shape of a sample: its points and alpha-edges.
#[derive(Debug, Clone)]
pub struct AlphaShape {
    pub alpha: f64,
    pub points: Vec<Point2>,
    pub edges: Vec<AlphaEdge>,
}

impl AlphaShape {
    /// Builds the alpha-shape with the Delaunay-filtered search.
    pub fn build(points: Vec<Point2>, alpha: f64) -> Result<Self> {
        let edges = alpha_edges_fast(&points, alpha)?;
        Ok(AlphaShape {
            alpha,
            points,
            edges,
        })
    }

    /// Wraps an existing edge list, checking the edge invariants.
    pub fn from_edges(points: Vec<Point2>, alpha: f64, edges: Vec<AlphaEdge>) -> Result<Self> {
        check_alpha(alpha)?;
        let mut seen = HashSet::with_capacity(edges.len());
        for e in &edges {
            if e.i >= e.j || e.j >= points.len() || !seen.insert((e.i, e.j)) {
                return Err(Error::NotAnAlphaEdge { i: e.i, j: e.j });
            }
            if !(e.empty_plus || e.empty_minus) {
                return Err(Error::NotAnAlphaEdge { i: e.i, j: e.j });
            }
            let length = points[e.i].dist(points[e.j]);
            if length > 2.0 * alpha + EPS_GEOM {
                return Err(Error::ChordTooLong { length, alpha });
            }
        }
        Ok(AlphaShape {
            alpha,
            points,
            edges,
        })
    }

    pub fn edge_length(&self, edge: &AlphaEdge) -> f64 {
        self.points[edge.i].dist(self.points[edge.j])
    }

    /// Sum of edge lengths; each unordered pair counted once.
    pub fn shape_perimeter(&self) -> f64 {
        self.edges.iter().map(|e| self.edge_length(e)).sum()
    }

    /// Sum over edges of the radius-alpha minor arc spanning the edge.
    pub fn hull_perimeter(&self) -> f64 {
        self.edges
            .iter()
            .map(|e| {
                let ell = self.edge_length(e).min(2.0 * self.alpha);
                arc_length_for_chord(self.alpha, ell).expect("edge length bounded by 2 alpha")
            })
            .sum()
    }

    pub fn max_edge_length(&self) -> f64 {
        self.edges
            .iter()
            .map(|e| self.edge_length(e))
            .fold(0.0, f64::max)
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(AlphaEdge::pair).collect()
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidAlpha(alpha))
    }
}

/// Rejects non-finite coordinates and duplicated points.
fn validate_points(points: &[Point2], min_len: usize) -> Result<()> {
    if points.len() < min_len {
        return Err(Error::TooFewPoints {
            required: min_len,
            got: points.len(),
        });
    }
    for p in points {
        p.ensure_finite()?;
    }
    // Adding 0.0 folds -0.0 into 0.0 so signed zeros sort together.
    let key = |p: Point2| (p.x + 0.0, p.y + 0.0);
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_unstable_by(|&a, &b| {
        let (p, q) = (key(points[a]), key(points[b]));
        p.0.total_cmp(&q.0).then(p.1.total_cmp(&q.1))
    });
    for w in order.windows(2) {
        if points[w[0]] == points[w[1]] {
            return Err(Error::DuplicatePoints {
                i: w[0].min(w[1]),
                j: w[0].max(w[1]),
            });
        }
    }
    Ok(())
}

/// Squared blocking radius: a point blocks a disk when strictly closer than
/// `alpha - EPS_GEOM` to its center.
fn blocking_radius_sq(alpha: f64) -> f64 {
    let r = alpha - EPS_GEOM;
    if r > 0.0 {
        r * r
    } else {
        0.0
    }
}

/// Tests the pair `(i, j)` with the supplied emptiness oracle. Returns `None`
/// when the pair is too far apart or both disks are occupied.
fn test_pair<F>(
    points: &[Point2],
    i: usize,
    j: usize,
    alpha: f64,
    mut blocked: F,
) -> Option<AlphaEdge>
where
    F: FnMut(Point2, [usize; 2]) -> bool,
{
    let centers = match disk_centers(points[i], points[j], alpha) {
        Ok(c) => c,
        Err(_) => return None,
    };
    let empty_plus = !blocked(centers.plus, [i, j]);
    let empty_minus = if centers.degenerate {
        empty_plus
    } else {
        !blocked(centers.minus, [i, j])
    };
    (empty_plus || empty_minus).then_some(AlphaEdge {
        i,
        j,
        centers,
        empty_plus,
        empty_minus,
    })
}

/// Reference construction: every pair within `2 alpha` against every point.
pub fn alpha_edges_bruteforce(points: &[Point2], alpha: f64) -> Result<Vec<AlphaEdge>> {
    check_alpha(alpha)?;
    validate_points(points, 2)?;
    let r2 = blocking_radius_sq(alpha);
    let reach_sq = (2.0 * alpha + EPS_GEOM).powi(2);
    let blocked = |c: Point2, ex: [usize; 2]| {
        points
            .iter()
            .enumerate()
            .any(|(k, p)| k != ex[0] && k != ex[1] && p.dist_sq(c) < r2)
    };
    let mut edges = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if points[i].dist_sq(points[j]) > reach_sq {
                continue;
            }
            if let Some(e) = test_pair(points, i, j, alpha, blocked) {
                edges.push(e);
            }
        }
    }
    Ok(edges)
}

/// Delaunay-filtered construction with a bucket-grid emptiness test; same
/// output as [`alpha_edges_bruteforce`], sorted by `(i, j)`.
pub fn alpha_edges_fast(points: &[Point2], alpha: f64) -> Result<Vec<AlphaEdge>> {
    check_alpha(alpha)?;
    validate_points(points, 2)?;
    let grid = PointGrid::new(points, 0.5 * alpha);
    let reach_sq = (2.0 * alpha + EPS_GEOM).powi(2);
    let candidates = match candidates::delaunay_candidates(points) {
        Some(c) => c,
        None => all_pairs_within(points, &grid, reach_sq),
    };
    let r2 = blocking_radius_sq(alpha);
    let blocked = |c: Point2, ex: [usize; 2]| grid.any_within(c, r2, ex);
    let edges = candidates
        .into_iter()
        .filter(|&(i, j)| points[i].dist_sq(points[j]) <= reach_sq)
        .filter_map(|(i, j)| test_pair(points, i, j, alpha, blocked))
        .collect();
    Ok(edges)
}

fn all_pairs_within(points: &[Point2], grid: &PointGrid<'_>, reach_sq: f64) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for (i, &p) in points.iter().enumerate() {
        for j in grid.within(p, reach_sq * (1.0 + 1e-12)) {
            if j > i {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// Indices of sample points with no other sample point closer than `2 alpha`.
pub fn isolated_points(points: &[Point2], alpha: f64) -> Result<Vec<usize>> {
    check_alpha(alpha)?;
    validate_points(points, 0)?;
    let grid = PointGrid::new(points, 2.0 * alpha);
    let r2 = (2.0 * alpha).powi(2);
    Ok((0..points.len())
        .filter(|&k| !grid.any_within(points[k], r2, [k, k]))
        .collect())
}
