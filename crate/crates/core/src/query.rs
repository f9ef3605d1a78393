//! End-to-end queries in caller coordinates: normalize the frame, solve in
//! the canonical scene, and map the answer back.

use crate::error::{Error, Result};
use crate::geometry::{normalize_scene, FrameTransform, Point, Rect};
use crate::interior;
use crate::paths::{self, PathSolution, PathType};

/// A solved query, everything expressed in the caller's original frame
/// except `witness`, which stays a canonical-frame crossing coordinate.
#[derive(Debug, Clone)]
pub struct QueryAnswer {
    pub path_type: PathType,
    pub length: f64,
    pub vertices: Vec<Point>,
    pub segment_weights: Vec<f64>,
    pub witness: Option<f64>,
    pub frame: FrameTransform,
}

fn straight_answer(s: Point, t: Point, inside: bool) -> QueryAnswer {
    QueryAnswer {
        path_type: PathType::new(if inside { 12 } else { 1 }).unwrap(),
        length: s.dist(t),
        vertices: vec![s, t],
        segment_weights: vec![1.0],
        witness: None,
        frame: FrameTransform::identity(),
    }
}

fn map_back(sol: PathSolution, frame: FrameTransform, reversed: bool) -> QueryAnswer {
    let mut vertices: Vec<Point> = sol
        .polyline
        .vertices
        .iter()
        .map(|&p| frame.to_original(p))
        .collect();
    let mut weights = sol.polyline.segment_weights.clone();
    if reversed {
        vertices.reverse();
        weights.reverse();
    }
    QueryAnswer {
        path_type: sol.path_type,
        length: frame.length_to_original(sol.length),
        vertices,
        segment_weights: weights,
        witness: sol.witness,
        frame,
    }
}

/// Shortest path between `s` and `t` for a rectangle of weight `alpha` in
/// ambient weight 1.
///
/// Weight exactly 1 short-circuits to the straight segment. A source outside
/// the rectangle is exchanged with the target when the target is on or
/// inside it (the metric is symmetric); when both endpoints are strictly
/// outside, the query is refused as unsolvable in closed form.
pub fn solve_query(rect: Rect, s: Point, t: Point, alpha: f64) -> Result<QueryAnswer> {
    if alpha.is_nan() || alpha <= 0.0 || !alpha.is_finite() {
        return Err(Error::WeightOutOfRange(alpha));
    }
    if (alpha - 1.0).abs() < 1e-12 {
        let tol = 1e-9 * rect.width().max(rect.height()).max(1.0);
        return Ok(straight_answer(
            s,
            t,
            rect.contains_strict(s, tol) && rect.contains_strict(t, tol),
        ));
    }

    let tol = 1e-9 * rect.width().max(rect.height()).max(1.0);
    let s_out = !rect.contains_closed(s, tol);
    let t_out = !rect.contains_closed(t, tol);
    if s_out && t_out {
        return Err(Error::SourceOutsideUnsupported);
    }
    let (s, t, reversed) = if s_out { (t, s, true) } else { (s, t, false) };

    let (scene, frame, t_c) = normalize_scene(rect, s, t, alpha)?;
    let sol = paths::shortest_path_any_source(&scene, t_c)?;
    Ok(map_back(sol, frame, reversed))
}

/// Recomputes the weighted length of an answer from its vertices and the
/// original rectangle, for round-trip checks of serialized output.
pub fn recompute_length(rect: Rect, answer_vertices: &[Point], alpha: f64) -> Result<f64> {
    if answer_vertices.len() < 2 {
        return Err(Error::DegeneratePolyline);
    }
    // Straight-segment answers for weight 1 need no canonical machinery.
    if (alpha - 1.0).abs() < 1e-12 {
        return Ok(answer_vertices.windows(2).map(|p| p[0].dist(p[1])).sum());
    }
    let s = answer_vertices[0];
    let t = *answer_vertices.last().unwrap();
    let tol = 1e-9 * rect.width().max(rect.height()).max(1.0);
    let (s, t, reversed) = if !rect.contains_closed(s, tol) {
        (t, s, true)
    } else {
        (s, t, false)
    };
    let (scene, frame, _) = normalize_scene(rect, s, t, alpha)?;
    let mut canonical: Vec<Point> = answer_vertices
        .iter()
        .map(|&p| frame.to_canonical(p))
        .collect();
    if reversed {
        canonical.reverse();
    }
    let len = crate::geometry::polyline_weighted_length(&canonical, &scene)?;
    Ok(frame.length_to_original(len))
}

/// Canonical-frame solve for library callers that already hold a scene.
pub fn solve_canonical(scene: &crate::geometry::CanonicalScene, t: Point) -> Result<PathSolution> {
    match scene.source {
        crate::geometry::SourceLocation::OnTopBoundary { .. } => paths::shortest_path(scene, t),
        crate::geometry::SourceLocation::Interior(_) => interior::shortest_path_interior(scene, t),
    }
}
