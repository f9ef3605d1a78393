//! Exact shortest-path engine for a single weighted axis-aligned rectangle.
//!
//! A rectangle of weight `alpha` (with `0 < alpha < sqrt(2)`) sits in an
//! ambient plane of weight 1; path length is Euclidean length times the
//! local weight, with edge travel costed at the cheaper side. This crate
//! provides:
//!
//! - closed-form shortest paths and their vertex polylines for sources on
//!   the rectangle boundary ([`paths`]) and inside it ([`interior`]);
//! - the shortest-path-map bisector catalog and point classification
//!   ([`spm`]);
//! - an independent brute-force oracle over boundary sample points
//!   ([`oracle`]) used to validate every closed form;
//! - a verifier for the certificate that the two-refraction corner
//!   configuration admits no exact solution by radicals ([`cert`]).

pub mod cert;
pub mod error;
pub mod geometry;
pub mod interior;
pub mod modpoly;
pub mod oracle;
pub mod paths;
pub mod query;
pub mod roots;
pub mod spm;

pub use error::{Error, Result};
pub use geometry::{
    clip_segment_to_rect, normalize_scene, polyline_weighted_length, refract, snell_context,
    CanonicalScene, FrameTransform, Point, Rect, Refraction, SnellContext, SourceLocation,
    WeightedPolyline,
};
pub use interior::shortest_path_interior;
pub use oracle::{oracle_gap, oracle_shortest, refine_path, OracleResult, SteinerGraph};
pub use paths::{
    is_feasible, path_length, path_vertices, shortest_path, solve_w1, solve_w2, PathSolution,
    PathType, QuarticCoefficients,
};
pub use query::{solve_query, QueryAnswer};
pub use spm::{
    bisector_catalog, bisector_y, classify, interior_catalog, sample_spm_grid, BisectorCurve,
    CurveForm, SpmCell, SpmGrid,
};

pub use cert::{verify_certificate, CertificateReport};
