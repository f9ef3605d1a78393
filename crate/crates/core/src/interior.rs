//! Shortest paths from a source strictly inside the rectangle.
//!
//! The admissible shapes are the boundary-source types that do not touch the
//! top boundary from outside, instantiated symmetrically around every edge
//! and corner: straight interior segments, single refractions through an
//! edge, corner bends, and (above weight 1) critical-angle slides along an
//! edge with optional re-entry. Lengths come from exact vertex
//! constructions; validity is established structurally, and the whole module
//! is cross-validated against the brute-force oracle.

use crate::error::{Error, Result};
use crate::geometry::{
    rect_corners, CanonicalScene, Point, Side, SourceLocation, WeightClass, WeightedPolyline,
    GEOM_EPS,
};
use crate::paths::{validate_polyline, PathSolution, PathType};
use crate::roots::bisect;

fn beyond(side: Side, t: Point, scene: &CanonicalScene) -> bool {
    match side {
        Side::Left => t.x < -GEOM_EPS,
        Side::Right => scene.width.is_finite() && t.x > scene.width + GEOM_EPS,
        Side::Top => t.y > GEOM_EPS,
        Side::Bottom => t.y < -1.0 - GEOM_EPS,
    }
}

fn side_corners(side: Side, scene: &CanonicalScene) -> (Point, Point) {
    side.endpoints(scene)
}

/// Unit vector along `side` pointing from `from` toward `toward`.
fn unit_toward(from: Point, toward: Point) -> (f64, f64) {
    let (dx, dy) = (toward.x - from.x, toward.y - from.y);
    let len = dx.hypot(dy);
    (dx / len, dy / len)
}

fn offset(p: Point, dir: (f64, f64), by: f64) -> Point {
    Point::new(p.x + by * dir.0, p.y + by * dir.1)
}

/// The other side adjacent at `corner`.
fn adjacent_side(side: Side, corner: Point, scene: &CanonicalScene) -> Option<Side> {
    Side::all(scene)
        .into_iter()
        .find(|&s| s != side && s.contains(corner, scene))
}

fn solution(
    scene: &CanonicalScene,
    label: u8,
    vertices: Vec<Point>,
    classes: Vec<WeightClass>,
    witness: Option<f64>,
) -> Option<PathSolution> {
    let poly = WeightedPolyline::from_classes(vertices, classes, scene.alpha).ok()?;
    validate_polyline(&poly, scene).ok()?;
    Some(PathSolution {
        path_type: PathType::new(label).expect("static label"),
        length: poly.total_length,
        polyline: poly,
        witness,
    })
}

/// Single refraction through `side`: the stationary crossing of
/// `alpha*|p v| + |v t|` over the side, by bisection on the derivative.
pub(crate) fn refraction_candidate(
    scene: &CanonicalScene,
    t: Point,
    side: Side,
) -> Option<PathSolution> {
    let p = scene.source_point();
    if !beyond(side, t, scene) {
        return None;
    }
    let (e0, e1) = side_corners(side, scene);
    let (dx, dy) = (e1.x - e0.x, e1.y - e0.y);
    let place = |u: f64| Point::new(e0.x + u * dx, e0.y + u * dy);
    let deriv = |u: f64| {
        let v = place(u);
        let dp = v.dist(p).max(f64::MIN_POSITIVE);
        let dt = v.dist(t).max(f64::MIN_POSITIVE);
        scene.alpha * ((v.x - p.x) * dx + (v.y - p.y) * dy) / dp
            + ((v.x - t.x) * dx + (v.y - t.y) * dy) / dt
    };
    let u = bisect(deriv, 0.0, 1.0).ok()?;
    let v = place(u);
    let witness = if side.is_vertical() { v.y } else { v.x };
    let label = if side.is_vertical() { 6 } else { 10 };
    solution(
        scene,
        label,
        vec![p, v, t],
        vec![WeightClass::Interior, WeightClass::Exterior],
        Some(witness),
    )
}

/// Interior chord to a rectangle corner, then straight to the target.
pub(crate) fn corner_candidate(
    scene: &CanonicalScene,
    t: Point,
    corner: Point,
) -> Option<PathSolution> {
    let p = scene.source_point();
    solution(
        scene,
        9,
        vec![p, corner, t],
        vec![WeightClass::Interior, WeightClass::Exterior],
        None,
    )
}

/// Critical-angle hit point on `side`, sliding toward `corner`.
fn critical_hit(scene: &CanonicalScene, from: Point, side: Side, corner: Point) -> Option<Point> {
    let sn = scene.snell();
    let d = side.dist_to_line(from, scene);
    let foot = side.foot(from, scene);
    let run = d * sn.tan_c;
    if run > foot.dist(corner) + GEOM_EPS {
        return None; // hit point would fall past the corner
    }
    Some(offset(foot, unit_toward(foot, corner), run))
}

/// Critical hit on `side`, slide along the edge to `corner`, straight out.
pub(crate) fn slide_corner_candidate(
    scene: &CanonicalScene,
    t: Point,
    side: Side,
    corner: Point,
) -> Option<PathSolution> {
    if scene.alpha <= 1.0 {
        return None;
    }
    let p = scene.source_point();
    let h = critical_hit(scene, p, side, corner)?;
    solution(
        scene,
        7,
        vec![p, h, corner, t],
        vec![
            WeightClass::Interior,
            WeightClass::Edge,
            WeightClass::Exterior,
        ],
        None,
    )
}

/// Critical hit on `side`, slide toward `corner`, re-enter at the critical
/// angle, and exit by refraction through the adjacent side.
pub(crate) fn slide_exit_candidate(
    scene: &CanonicalScene,
    t: Point,
    side: Side,
    corner: Point,
) -> Option<PathSolution> {
    if scene.alpha <= 1.0 {
        return None;
    }
    let exit_side = adjacent_side(side, corner, scene)?;
    if !beyond(exit_side, t, scene) {
        return None;
    }
    let sn = scene.snell();
    let a2 = scene.alpha * scene.alpha;
    let tan_exit = (a2 - 1.0).sqrt() / (2.0 - a2).sqrt();

    let p = scene.source_point();
    let h1 = critical_hit(scene, p, side, corner)?;

    let d_t = exit_side.dist_to_line(t, scene);
    let foot_t = exit_side.foot(t, scene);
    let x_exit = offset(foot_t, unit_toward(foot_t, corner), d_t * tan_exit);

    let h2 = offset(
        corner,
        unit_toward(corner, side.foot(p, scene)),
        x_exit.dist(corner) * sn.tan_c,
    );
    if h1.dist(corner) + GEOM_EPS < h2.dist(corner) {
        return None; // slide must move toward the corner
    }
    solution(
        scene,
        8,
        vec![p, h1, h2, x_exit, t],
        vec![
            WeightClass::Interior,
            WeightClass::Edge,
            WeightClass::Interior,
            WeightClass::Exterior,
        ],
        None,
    )
}

/// Critical hit, slide toward `corner`, critical re-entry to an interior target.
pub(crate) fn slide_inside_candidate(
    scene: &CanonicalScene,
    t: Point,
    side: Side,
    corner: Point,
) -> Option<PathSolution> {
    if scene.alpha <= 1.0 {
        return None;
    }
    let sn = scene.snell();
    let p = scene.source_point();
    let h1 = critical_hit(scene, p, side, corner)?;
    let foot_t = side.foot(t, scene);
    let h2 = offset(
        foot_t,
        unit_toward(corner, side.foot(p, scene)),
        side.dist_to_line(t, scene) * sn.tan_c,
    );
    if h1.dist(corner) + GEOM_EPS < h2.dist(corner) {
        return None;
    }
    solution(
        scene,
        13,
        vec![p, h1, h2, t],
        vec![
            WeightClass::Interior,
            WeightClass::Edge,
            WeightClass::Interior,
        ],
        None,
    )
}

/// Slide that passes the corner onto the adjacent edge before re-entering.
pub(crate) fn corner_pass_inside_candidate(
    scene: &CanonicalScene,
    t: Point,
    side: Side,
    corner: Point,
) -> Option<PathSolution> {
    if scene.alpha <= 1.0 {
        return None;
    }
    let far_side = adjacent_side(side, corner, scene)?;
    let sn = scene.snell();
    let p = scene.source_point();
    let h1 = critical_hit(scene, p, side, corner)?;
    let foot_t = far_side.foot(t, scene);
    let (fa, fb) = side_corners(far_side, scene);
    let far_end = if fa.dist(corner) > fb.dist(corner) {
        fa
    } else {
        fb
    };
    let h2 = offset(
        foot_t,
        unit_toward(corner, far_end),
        far_side.dist_to_line(t, scene) * sn.tan_c,
    );
    solution(
        scene,
        13,
        vec![p, h1, corner, h2, t],
        vec![
            WeightClass::Interior,
            WeightClass::Edge,
            WeightClass::Edge,
            WeightClass::Interior,
        ],
        None,
    )
}

/// Shortest path from an interior source: argmin over all structural
/// candidates, ties broken toward the smaller type label.
pub fn shortest_path_interior(scene: &CanonicalScene, t: Point) -> Result<PathSolution> {
    let p = match scene.source {
        SourceLocation::Interior(p) => p,
        SourceLocation::OnTopBoundary { .. } => return Err(Error::SourceNotInside),
    };
    if p.dist(t) <= 1e-12 {
        return Err(Error::DegeneratePolyline);
    }

    let mut candidates: Vec<PathSolution> = Vec::new();
    let mut push = |c: Option<PathSolution>| {
        if let Some(sol) = c {
            candidates.push(sol);
        }
    };

    if scene.contains_closed(t) {
        push(solution(
            scene,
            12,
            vec![p, t],
            vec![WeightClass::Interior],
            None,
        ));
        if scene.alpha > 1.0 {
            for side in Side::all(scene) {
                let (ca, cb) = side_corners(side, scene);
                for corner in [ca, cb] {
                    push(slide_inside_candidate(scene, t, side, corner));
                    push(corner_pass_inside_candidate(scene, t, side, corner));
                }
            }
        }
    }
    if !scene.contains_strict(t) {
        for side in Side::all(scene) {
            push(refraction_candidate(scene, t, side));
            let (ca, cb) = side_corners(side, scene);
            for corner in [ca, cb] {
                push(slide_corner_candidate(scene, t, side, corner));
                push(slide_exit_candidate(scene, t, side, corner));
            }
        }
        for corner in rect_corners(scene) {
            push(corner_candidate(scene, t, corner));
        }
    }

    candidates
        .into_iter()
        .min_by(|a, b| {
            (a.length, a.path_type.index())
                .partial_cmp(&(b.length, b.path_type.index()))
                .unwrap()
        })
        .ok_or(Error::NoFeasibleType)
}

/// Length of the canonical bottom-left candidate family `label` at `t`, used
/// by the interior bisector sampler. Families are pinned to the left edge,
/// the bottom edge, and the bottom-left corner.
pub(crate) fn family_length(scene: &CanonicalScene, t: Point, label: u8) -> Option<f64> {
    let bl = Point::new(0.0, -1.0);
    let sol = match label {
        6 => refraction_candidate(scene, t, Side::Left),
        10 => refraction_candidate(scene, t, Side::Bottom),
        9 => corner_candidate(scene, t, bl),
        7 => slide_corner_candidate(scene, t, Side::Left, bl),
        8 => slide_exit_candidate(scene, t, Side::Left, bl),
        12 => solution(
            scene,
            12,
            vec![scene.source_point(), t],
            vec![WeightClass::Interior],
            None,
        ),
        13 => slide_inside_candidate(scene, t, Side::Left, bl),
        _ => None,
    };
    sol.map(|s| s.length)
}
