//! Perimeter estimation from uniform planar samples via alpha-shapes.
//!
//! The crate provides the alpha-edge construction (a brute-force reference
//! and a Delaunay-filtered fast path), the alpha-shape and alpha-convex-hull
//! perimeter estimators, analytic test domains with exact perimeters,
//! diagnostics for the geometric events that drive the estimator's
//! convergence, and a reproducible Monte Carlo harness.

pub mod alpha;
pub mod diagnostics;
pub mod domain;
pub mod error;
pub mod experiment;
pub mod geom;
pub mod rng;

pub use alpha::{
    alpha_edges_bruteforce, alpha_edges_fast, classify_sidedness, isolated_points, AlphaEdge,
    AlphaShape, EdgeSidedness,
};
pub use diagnostics::{
    edge_diagnostics, graph_structure, hausdorff_to_boundary, max_deviation_angle,
    polygon_structure, sandwich_check, sandwich_check_with_resolution, EdgeDiagnostics,
    GraphStructure, PolygonReport, Report, SandwichReport, SandwichVerdict,
};
pub use domain::{BoundaryComponent, BoundaryPoint, Domain, DomainKind};
pub use error::{Error, Result};
pub use experiment::{
    emit_outputs, fit_loglog_slope, run_experiment, CellSummary, ConfigFile, Estimator,
    ExperimentConfig, ExperimentResult, SlopeFit, Statistic,
};
pub use geom::{
    angle_between_lines, arc_length_for_chord, cap_area, disk_centers, DiskCenterPair, Point2,
    Segment, EPS_GEOM,
};
pub use rng::{replicate_rng, rng_from_seed, stream_seed, SampleRng};
