//! Measurements of an alpha-shape against the true boundary: edge lengths,
//! distance to the boundary, deviation angles, Hausdorff distance, the
//! length-ratio sandwich bound and the polygon structure of the edge graph.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::alpha::{classify_sidedness, isolated_points, AlphaShape};
use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::geom::{angle_between_lines, Point2, Segment};

/// Subintervals per edge when probing distance to the boundary; probes
/// include both endpoints and the midpoint.
pub const EDGE_PROBE_INTERVALS: usize = 16;

/// Default sampling density, in points per unit length, for Hausdorff
/// estimates. The discretization bound is its reciprocal.
pub const DEFAULT_RESOLUTION: usize = 2000;

/// Flat `name=value` view used by the text and CSV serializations.
pub trait Report {
    fn fields(&self) -> Vec<(&'static str, String)>;

    fn to_key_value(&self) -> String {
        let mut out = String::new();
        for (k, v) in self.fields() {
            let _ = writeln!(out, "{k}={v}");
        }
        out
    }

    fn csv_header(&self) -> String {
        self.fields()
            .iter()
            .map(|(k, _)| *k)
            .collect::<Vec<_>>()
            .join(",")
    }

    fn csv_row(&self) -> String {
        self.fields()
            .into_iter()
            .map(|(_, v)| v)
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn opt(v: Option<f64>) -> String {
    v.map_or_else(|| "NA".to_string(), |x| x.to_string())
}

#[derive(Debug, Clone, PartialEq)]
pub struct EdgeDiagnostics {
    pub max_edge_length: f64,
    /// Largest distance to the boundary over the probe points of all edges.
    pub max_boundary_dist: f64,
    /// Largest angle between an edge and the boundary tangent at the
    /// projection of its midpoint.
    pub max_deviation_angle: f64,
    pub all_one_sided: bool,
    pub isolated_count: usize,
}

impl Report for EdgeDiagnostics {
    fn fields(&self) -> Vec<(&'static str, String)> {
        vec![
            ("max_edge_length", self.max_edge_length.to_string()),
            ("max_boundary_dist", self.max_boundary_dist.to_string()),
            ("max_deviation_angle", self.max_deviation_angle.to_string()),
            ("all_one_sided", self.all_one_sided.to_string()),
            ("isolated_count", self.isolated_count.to_string()),
        ]
    }
}

fn segment(shape: &AlphaShape, i: usize, j: usize) -> Segment {
    Segment::new(shape.points[i], shape.points[j])
}

/// Angle between each edge and the boundary tangent at its midpoint's
/// projection, maximized over edges. The supremum over the whole edge is
/// approximated by the midpoint value.
pub fn max_deviation_angle(shape: &AlphaShape, domain: &Domain) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for e in &shape.edges {
        let seg = segment(shape, e.i, e.j);
        let probe = |err: Error| Error::EdgeProbe {
            i: e.i,
            j: e.j,
            source: Box::new(err),
        };
        let bp = domain.project_to_boundary(seg.midpoint()).map_err(probe)?;
        let angle = angle_between_lines(seg.direction(), bp.tangent).map_err(probe)?;
        worst = worst.max(angle);
    }
    Ok(worst)
}

pub fn edge_diagnostics(shape: &AlphaShape, domain: &Domain) -> Result<EdgeDiagnostics> {
    let mut max_boundary_dist: f64 = 0.0;
    let mut all_one_sided = true;
    for e in &shape.edges {
        let seg = segment(shape, e.i, e.j);
        for k in 0..=EDGE_PROBE_INTERVALS {
            let p = seg.at(k as f64 / EDGE_PROBE_INTERVALS as f64);
            max_boundary_dist = max_boundary_dist.max(domain.distance_to_boundary(p));
        }
        all_one_sided &= classify_sidedness(e)?.one_sided;
    }
    Ok(EdgeDiagnostics {
        max_edge_length: shape.max_edge_length(),
        max_boundary_dist,
        max_deviation_angle: max_deviation_angle(shape, domain)?,
        all_one_sided,
        isolated_count: isolated_points(&shape.points, shape.alpha)?.len(),
    })
}

/// Symmetric Hausdorff distance between the union of edges and the domain
/// boundary, estimated from `resolution` samples per unit length on both
/// sides. The returned value includes the `1 / resolution` discretization
/// bound.
pub fn hausdorff_to_boundary(
    shape: &AlphaShape,
    domain: &Domain,
    resolution: usize,
) -> Result<f64> {
    if shape.edges.is_empty() {
        return Err(Error::EmptyShape);
    }
    let res = resolution.max(1) as f64;
    let segments: Vec<Segment> = shape
        .edges
        .iter()
        .map(|e| segment(shape, e.i, e.j))
        .collect();

    let mut edge_to_boundary: f64 = 0.0;
    for seg in &segments {
        let count = ((seg.length() * res).ceil() as usize).max(1);
        for k in 0..=count {
            let p = seg.at(k as f64 / count as f64);
            edge_to_boundary = edge_to_boundary.max(domain.distance_to_boundary(p));
        }
    }

    let mut boundary_to_edges: f64 = 0.0;
    for comp in domain.components() {
        for bp in comp.samples(res) {
            let nearest = segments
                .iter()
                .map(|s| s.distance_to(bp.position))
                .fold(f64::INFINITY, f64::min);
            boundary_to_edges = boundary_to_edges.max(nearest);
        }
    }
    Ok(edge_to_boundary.max(boundary_to_edges) + 1.0 / res)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SandwichVerdict {
    Holds,
    Violated,
    /// Hausdorff distance not below the rolling radius; the bound does not apply.
    NotEvaluated,
}

impl SandwichVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            SandwichVerdict::Holds => "holds",
            SandwichVerdict::Violated => "violated",
            SandwichVerdict::NotEvaluated => "not_evaluated",
        }
    }
}

/// Length-ratio bounds from the Hausdorff distance `H` and deviation angle
/// `a`: `1 - H/r <= shape / boundary <= (1 + H/r) / cos a`.
#[derive(Debug, Clone, PartialEq)]
pub struct SandwichReport {
    pub hausdorff: f64,
    pub deviation_angle: Option<f64>,
    pub ratio: f64,
    pub lower_bound: Option<f64>,
    pub upper_bound: Option<f64>,
    pub verdict: SandwichVerdict,
}

impl SandwichReport {
    pub fn holds(&self) -> bool {
        self.verdict == SandwichVerdict::Holds
    }
}

impl Report for SandwichReport {
    fn fields(&self) -> Vec<(&'static str, String)> {
        vec![
            ("hausdorff", self.hausdorff.to_string()),
            ("deviation_angle", opt(self.deviation_angle)),
            ("ratio", self.ratio.to_string()),
            ("lower_bound", opt(self.lower_bound)),
            ("upper_bound", opt(self.upper_bound)),
            ("sandwich", self.verdict.as_str().to_string()),
        ]
    }
}

pub fn sandwich_check(shape: &AlphaShape, domain: &Domain) -> Result<SandwichReport> {
    sandwich_check_with_resolution(shape, domain, DEFAULT_RESOLUTION)
}

pub fn sandwich_check_with_resolution(
    shape: &AlphaShape,
    domain: &Domain,
    resolution: usize,
) -> Result<SandwichReport> {
    let hausdorff = hausdorff_to_boundary(shape, domain, resolution)?;
    let ratio = shape.shape_perimeter() / domain.exact_perimeter();
    let r = domain.rolling_r();
    if hausdorff >= r {
        return Ok(SandwichReport {
            hausdorff,
            deviation_angle: None,
            ratio,
            lower_bound: None,
            upper_bound: None,
            verdict: SandwichVerdict::NotEvaluated,
        });
    }
    let angle = max_deviation_angle(shape, domain)?;
    let lower = 1.0 - hausdorff / r;
    let upper = (1.0 + hausdorff / r) / angle.cos();
    let verdict = if lower <= ratio && ratio <= upper {
        SandwichVerdict::Holds
    } else {
        SandwichVerdict::Violated
    };
    Ok(SandwichReport {
        hausdorff,
        deviation_angle: Some(angle),
        ratio,
        lower_bound: Some(lower),
        upper_bound: Some(upper),
        verdict,
    })
}

/// Connectivity summary of an undirected edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStructure {
    /// degree -> number of vertices with that degree, over vertices touched
    /// by at least one edge.
    pub degree_histogram: BTreeMap<usize, usize>,
    pub all_degree_two: bool,
    /// Connected components of the edge graph.
    pub component_count: usize,
    /// Components in which every vertex has degree two, i.e. simple cycles.
    pub cycle_count: usize,
    /// Vertex lists of the cycle components, each sorted.
    pub cycles: Vec<Vec<usize>>,
}

pub fn graph_structure(vertex_count: usize, pairs: &[(usize, usize)]) -> GraphStructure {
    let mut adjacency = vec![Vec::new(); vertex_count];
    for &(i, j) in pairs {
        adjacency[i].push(j);
        adjacency[j].push(i);
    }
    let mut degree_histogram = BTreeMap::new();
    for adj in adjacency.iter().filter(|a| !a.is_empty()) {
        *degree_histogram.entry(adj.len()).or_insert(0) += 1;
    }
    let all_degree_two = !pairs.is_empty() && degree_histogram.keys().all(|&d| d == 2);

    let mut seen = vec![false; vertex_count];
    let mut component_count = 0;
    let mut cycles = Vec::new();
    for start in 0..vertex_count {
        if seen[start] || adjacency[start].is_empty() {
            continue;
        }
        component_count += 1;
        let mut stack = vec![start];
        let mut members = Vec::new();
        seen[start] = true;
        while let Some(v) = stack.pop() {
            members.push(v);
            for &w in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if members.iter().all(|&v| adjacency[v].len() == 2) {
            members.sort_unstable();
            cycles.push(members);
        }
    }
    GraphStructure {
        degree_histogram,
        all_degree_two,
        component_count,
        cycle_count: cycles.len(),
        cycles,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonReport {
    pub graph: GraphStructure,
    pub boundary_components: usize,
    /// Every vertex has degree two and the cycle count equals the number of
    /// boundary components.
    pub component_count_match: bool,
    /// Each cycle projects onto a single boundary component, and distinct
    /// cycles onto distinct components.
    pub cycles_match_components: bool,
}

impl Report for PolygonReport {
    fn fields(&self) -> Vec<(&'static str, String)> {
        let histogram = self
            .graph
            .degree_histogram
            .iter()
            .map(|(d, c)| format!("{d}:{c}"))
            .collect::<Vec<_>>()
            .join(";");
        vec![
            ("all_degree_two", self.graph.all_degree_two.to_string()),
            ("cycle_count", self.graph.cycle_count.to_string()),
            ("graph_components", self.graph.component_count.to_string()),
            ("boundary_components", self.boundary_components.to_string()),
            (
                "component_count_match",
                self.component_count_match.to_string(),
            ),
            (
                "cycles_match_components",
                self.cycles_match_components.to_string(),
            ),
            ("degree_histogram", histogram),
        ]
    }
}

/// Compares the alpha-edge graph with the boundary's component structure.
/// Never fails: a mismatch is reported, not raised.
pub fn polygon_structure(shape: &AlphaShape, domain: &Domain) -> PolygonReport {
    let graph = graph_structure(shape.points.len(), &shape.pairs());
    let boundary_components = domain.component_count();
    let component_count_match = graph.all_degree_two && graph.cycle_count == boundary_components;

    let project_component = |p: Point2| domain.project_to_boundary(p).ok().map(|b| b.component_id);
    let mut used = vec![false; boundary_components];
    let mut cycles_match_components = !graph.cycles.is_empty();
    for cycle in &graph.cycles {
        let ids: Vec<Option<usize>> = cycle
            .iter()
            .map(|&v| project_component(shape.points[v]))
            .collect();
        match ids[0] {
            Some(id) if ids.iter().all(|&x| x == Some(id)) && !used[id] => used[id] = true,
            _ => {
                cycles_match_components = false;
                break;
            }
        }
    }
    PolygonReport {
        graph,
        boundary_components,
        component_count_match,
        cycles_match_components,
    }
}
