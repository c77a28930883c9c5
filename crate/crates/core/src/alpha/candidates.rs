//! Candidate pairs for the fast alpha-edge search.
//!
//! In general position every alpha-edge is a Delaunay edge. Near-cocircular
//! groups of points admit several valid triangulations, so every pair of
//! vertices inside such a group is also returned and left for the emptiness
//! test to decide.

use spade::{DelaunayTriangulation, HasPosition, Triangulation};

use crate::geom::{Point2, EPS_GEOM};

/// Relative deviation from a shared circumcircle below which two adjacent
/// triangles are treated as one cocircular group.
const COCIRCULAR_REL_TOL: f64 = 1e-7;
/// Absolute floor for the same test, well above `EPS_GEOM`.
const COCIRCULAR_ABS_TOL: f64 = 1e3 * EPS_GEOM;

struct Site {
    position: spade::Point2<f64>,
    index: usize,
}

impl HasPosition for Site {
    type Scalar = f64;

    fn position(&self) -> spade::Point2<f64> {
        self.position
    }
}

/// Returns `None` when the triangulation cannot be built (coordinates outside
/// the range the exact predicates support); callers then enumerate pairs
/// directly.
pub(crate) fn delaunay_candidates(points: &[Point2]) -> Option<Vec<(usize, usize)>> {
    let sites: Vec<Site> = points
        .iter()
        .enumerate()
        .map(|(index, p)| Site {
            position: spade::Point2::new(p.x, p.y),
            index,
        })
        .collect();
    let tri: DelaunayTriangulation<Site> = DelaunayTriangulation::bulk_load(sites).ok()?;
    if tri.num_vertices() != points.len() {
        return None;
    }

    let mut pairs: Vec<(usize, usize)> = tri
        .undirected_edges()
        .map(|e| {
            let [a, b] = e.vertices();
            ordered(a.data().index, b.data().index)
        })
        .collect();

    // Union-find over faces joined across near-cocircular shared edges.
    let mut parent: Vec<usize> = (0..tri.num_all_faces()).collect();
    let mut joined = false;
    for edge in tri.undirected_edges() {
        let d = edge.as_directed();
        let (Some(left), Some(right)) = (d.face().as_inner(), d.rev().face().as_inner()) else {
            continue;
        };
        let (Some(far), Some(_)) = (d.rev().opposite_vertex(), d.opposite_vertex()) else {
            continue;
        };
        let (center, r2) = left.circumcircle();
        let r = r2.sqrt();
        let q = far.position();
        let dev = ((q.x - center.x).hypot(q.y - center.y) - r).abs();
        if dev <= COCIRCULAR_ABS_TOL.max(COCIRCULAR_REL_TOL * r) {
            union(&mut parent, left.fix().index(), right.fix().index());
            joined = true;
        }
    }
    if joined {
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for face in tri.inner_faces() {
            let root = find(&mut parent, face.fix().index());
            let entry = groups.entry(root).or_default();
            entry.extend(face.vertices().iter().map(|v| v.data().index));
        }
        for mut verts in groups.into_values() {
            verts.sort_unstable();
            verts.dedup();
            if verts.len() < 4 {
                continue;
            }
            for (a, &i) in verts.iter().enumerate() {
                for &j in &verts[a + 1..] {
                    pairs.push((i, j));
                }
            }
        }
    }

    pairs.sort_unstable();
    pairs.dedup();
    Some(pairs)
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let ra = find(parent, a);
    let rb = find(parent, b);
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}
