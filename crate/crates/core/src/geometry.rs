//! Canonical problem frame and the geometric primitives shared by the whole
//! engine: rigid frame transforms, segment clipping against the weighted
//! rectangle, weighted length evaluation, and Snell / critical-angle values.
//!
//! The canonical frame places a unit-height rectangle with its top-left
//! corner at the origin, spanning `[0, width] x [-1, 0]`. The region weight
//! is `alpha` inside the rectangle and `1` outside; travel exactly along an
//! edge costs `min(1, alpha)` per unit length.

use crate::error::{Error, Result};

/// Absolute/relative tolerance for geometric predicates (point on edge, clipping).
pub const GEOM_EPS: f64 = 1e-9;
/// Tolerance for pure arithmetic identities (transform round trips, sums).
pub const ARITH_EPS: f64 = 1e-12;

/// A point in the plane, scene units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dist(self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// Axis-aligned input rectangle in caller coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl Rect {
    /// Builds a rectangle from two opposite corners, normalizing coordinate order.
    pub fn new(x0: f64, y0: f64, x1: f64, y1: f64) -> Result<Self> {
        let (x0, x1) = if x0 <= x1 { (x0, x1) } else { (x1, x0) };
        let (y0, y1) = if y0 <= y1 { (y0, y1) } else { (y1, y0) };
        let w = x1 - x0;
        let h = y1 - y0;
        if !(w.is_finite() && h.is_finite()) || w <= 0.0 || h <= 0.0 {
            return Err(Error::DegenerateRectangle(w.min(h)));
        }
        Ok(Rect { x0, y0, x1, y1 })
    }

    pub fn width(&self) -> f64 {
        self.x1 - self.x0
    }

    pub fn height(&self) -> f64 {
        self.y1 - self.y0
    }

    pub fn contains_strict(&self, p: Point, eps: f64) -> bool {
        p.x > self.x0 + eps && p.x < self.x1 - eps && p.y > self.y0 + eps && p.y < self.y1 - eps
    }

    pub fn contains_closed(&self, p: Point, eps: f64) -> bool {
        p.x >= self.x0 - eps && p.x <= self.x1 + eps && p.y >= self.y0 - eps && p.y <= self.y1 + eps
    }
}

/// Where the source sits in the canonical frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SourceLocation {
    /// On the top side at `(s_x, 0)` with `s_x > 0`.
    OnTopBoundary { s_x: f64 },
    /// Strictly inside the rectangle.
    Interior(Point),
}

/// The normalized problem: unit-height rectangle `[0, width] x [-1, 0]`,
/// weight `alpha` inside, `1` outside.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalScene {
    pub alpha: f64,
    /// Rectangle width in canonical units; `f64::INFINITY` models a rectangle
    /// that extends arbitrarily far to the right.
    pub width: f64,
    pub source: SourceLocation,
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !alpha.is_finite() || alpha <= 0.0 || alpha >= std::f64::consts::SQRT_2 || alpha == 1.0 {
        return Err(Error::WeightOutOfRange(alpha));
    }
    Ok(())
}

impl CanonicalScene {
    /// Scene with the source on the top boundary.
    pub fn boundary(alpha: f64, s_x: f64, width: f64) -> Result<Self> {
        check_alpha(alpha)?;
        if width <= 0.0 || width.is_nan() {
            return Err(Error::DegenerateRectangle(width));
        }
        if !(s_x > 0.0 && s_x <= width) {
            return Err(Error::SourceAtCorner);
        }
        Ok(CanonicalScene {
            alpha,
            width,
            source: SourceLocation::OnTopBoundary { s_x },
        })
    }

    /// Scene with the source strictly inside the rectangle.
    pub fn interior(alpha: f64, p: Point, width: f64) -> Result<Self> {
        check_alpha(alpha)?;
        if width <= 0.0 || width.is_nan() {
            return Err(Error::DegenerateRectangle(width));
        }
        if !(p.x > 0.0 && p.x < width && p.y > -1.0 && p.y < 0.0) {
            return Err(Error::SourceNotInside);
        }
        Ok(CanonicalScene {
            alpha,
            width,
            source: SourceLocation::Interior(p),
        })
    }

    pub fn source_point(&self) -> Point {
        match self.source {
            SourceLocation::OnTopBoundary { s_x } => Point::new(s_x, 0.0),
            SourceLocation::Interior(p) => p,
        }
    }

    /// Source x-coordinate on the top boundary, if there.
    pub fn boundary_sx(&self) -> Result<f64> {
        match self.source {
            SourceLocation::OnTopBoundary { s_x } => Ok(s_x),
            SourceLocation::Interior(_) => Err(Error::SourceNotOnBoundary),
        }
    }

    pub fn snell(&self) -> SnellContext {
        snell_context(self.alpha).expect("scene weight already validated")
    }

    /// Weight of travel exactly along a rectangle edge.
    pub fn edge_weight(&self) -> f64 {
        self.alpha.min(1.0)
    }

    pub fn contains_strict(&self, p: Point) -> bool {
        p.x > GEOM_EPS && p.x < self.width - GEOM_EPS && p.y > -1.0 + GEOM_EPS && p.y < -GEOM_EPS
    }

    pub fn contains_closed(&self, p: Point) -> bool {
        p.x >= -GEOM_EPS
            && p.x <= self.width + GEOM_EPS
            && p.y >= -1.0 - GEOM_EPS
            && p.y <= GEOM_EPS
    }
}

/// Cached trigonometric values of the critical angle for a weight regime.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SnellContext {
    pub alpha: f64,
    pub theta_c: f64,
    pub sin_c: f64,
    pub cos_c: f64,
    pub tan_c: f64,
}

/// Critical-angle values: `sin θ_c = α` below weight 1, `sin θ_c = 1/α` above.
pub fn snell_context(alpha: f64) -> Result<SnellContext> {
    check_alpha(alpha)?;
    let sin_c = if alpha < 1.0 { alpha } else { 1.0 / alpha };
    let cos_c = if alpha < 1.0 {
        (1.0 - alpha * alpha).sqrt()
    } else {
        (1.0 - 1.0 / (alpha * alpha)).sqrt()
    };
    let tan_c = if alpha < 1.0 {
        alpha / (1.0 - alpha * alpha).sqrt()
    } else {
        1.0 / (alpha * alpha - 1.0).sqrt()
    };
    Ok(SnellContext {
        alpha,
        theta_c: sin_c.asin(),
        sin_c,
        cos_c,
        tan_c,
    })
}

/// Outcome of refraction across an interface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Refraction {
    Transmitted(f64),
    TotalInternalReflection,
}

/// Snell's law: `w_in * sin_in = w_out * sin_out`.
pub fn refract(sin_in: f64, w_in: f64, w_out: f64) -> Refraction {
    let sin_out = sin_in * w_in / w_out;
    if sin_out > 1.0 {
        Refraction::TotalInternalReflection
    } else {
        Refraction::Transmitted(sin_out)
    }
}

/// Rigid map between the caller frame and the canonical frame.
///
/// Canonical coordinates are obtained from originals by rotating by
/// `rotation` quarter turns, optionally mirroring across a vertical axis,
/// scaling down by `scale`, and adding `translation`. `scale` is the number
/// of original units per canonical unit, so weighted lengths convert by a
/// plain multiply.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameTransform {
    pub translation: (f64, f64),
    /// Counterclockwise quarter turns applied to original coordinates, 0..4.
    pub rotation: u8,
    pub mirror: bool,
    pub scale: f64,
}

fn rot_quarter(k: u8, p: Point) -> Point {
    match k % 4 {
        0 => p,
        1 => Point::new(-p.y, p.x),
        2 => Point::new(-p.x, -p.y),
        _ => Point::new(p.y, -p.x),
    }
}

impl FrameTransform {
    pub fn identity() -> Self {
        FrameTransform {
            translation: (0.0, 0.0),
            rotation: 0,
            mirror: false,
            scale: 1.0,
        }
    }

    pub fn to_canonical(&self, p: Point) -> Point {
        let q = rot_quarter(self.rotation, p);
        let q = if self.mirror {
            Point::new(-q.x, q.y)
        } else {
            q
        };
        Point::new(
            q.x / self.scale + self.translation.0,
            q.y / self.scale + self.translation.1,
        )
    }

    pub fn to_original(&self, c: Point) -> Point {
        let q = Point::new(
            (c.x - self.translation.0) * self.scale,
            (c.y - self.translation.1) * self.scale,
        );
        let q = if self.mirror {
            Point::new(-q.x, q.y)
        } else {
            q
        };
        rot_quarter(4 - self.rotation % 4, q)
    }

    pub fn length_to_original(&self, canonical_len: f64) -> f64 {
        canonical_len * self.scale
    }
}

/// Brings an arbitrary rectangle/source/target into the canonical frame.
///
/// The source ends up on the top side with `s_x > 0` (or strictly inside),
/// and the target satisfies `t.x <= s_x` for boundary sources, mirroring the
/// frame when necessary.
pub fn normalize_scene(
    rect: Rect,
    s: Point,
    t: Point,
    alpha: f64,
) -> Result<(CanonicalScene, FrameTransform, Point)> {
    check_alpha(alpha)?;
    if !s.is_finite() || !t.is_finite() {
        return Err(Error::DegenerateRectangle(f64::NAN));
    }
    let tol = GEOM_EPS * rect.width().max(rect.height()).max(1.0);

    let on_left = (s.x - rect.x0).abs() <= tol;
    let on_right = (s.x - rect.x1).abs() <= tol;
    let on_bottom = (s.y - rect.y0).abs() <= tol;
    let on_top = (s.y - rect.y1).abs() <= tol;
    let x_in = s.x >= rect.x0 - tol && s.x <= rect.x1 + tol;
    let y_in = s.y >= rect.y0 - tol && s.y <= rect.y1 + tol;

    let on_boundary = x_in && y_in && (on_left || on_right || on_bottom || on_top);
    let strictly_inside = rect.contains_strict(s, tol);

    if !on_boundary && !strictly_inside {
        return Err(Error::SourceOutsideUnsupported);
    }
    if on_boundary && (on_left as u8 + on_right as u8 + on_bottom as u8 + on_top as u8) > 1 {
        return Err(Error::SourceAtCorner);
    }

    // Quarter turns that bring the source's side to the top.
    let rotation: u8 = if strictly_inside || on_top {
        0
    } else if on_right {
        1
    } else if on_bottom {
        2
    } else {
        3
    };

    let corners = [
        Point::new(rect.x0, rect.y0),
        Point::new(rect.x1, rect.y0),
        Point::new(rect.x1, rect.y1),
        Point::new(rect.x0, rect.y1),
    ];
    let rotated: Vec<Point> = corners.iter().map(|&c| rot_quarter(rotation, c)).collect();
    let rx0 = rotated.iter().map(|p| p.x).fold(f64::INFINITY, f64::min);
    let rx1 = rotated
        .iter()
        .map(|p| p.x)
        .fold(f64::NEG_INFINITY, f64::max);
    let ry1 = rotated
        .iter()
        .map(|p| p.y)
        .fold(f64::NEG_INFINITY, f64::max);
    let ry0 = rotated.iter().map(|p| p.y).fold(f64::INFINITY, f64::min);
    let scale = ry1 - ry0;
    let width_c = (rx1 - rx0) / scale;

    let mut frame = FrameTransform {
        translation: (-rx0 / scale, -ry1 / scale),
        rotation,
        mirror: false,
        scale,
    };

    let s_c = frame.to_canonical(s);
    let t_c = frame.to_canonical(t);

    if strictly_inside {
        let scene = CanonicalScene::interior(alpha, s_c, width_c)?;
        return Ok((scene, frame, t_c));
    }

    let ctol = GEOM_EPS * width_c.max(1.0);
    let mut s_x = s_c.x;
    let mut t_c = t_c;
    if s_x <= ctol || s_x >= width_c - ctol {
        return Err(Error::SourceAtCorner);
    }
    if t_c.x > s_x {
        // Mirror so the target sits left of the source. With mirroring folded
        // as x -> -x, the translation absorbs the width offset.
        frame.mirror = true;
        frame.translation.0 = rx1 / scale;
        s_x = width_c - s_x;
        t_c = Point::new(width_c - t_c.x, t_c.y);
    }
    let scene = CanonicalScene::boundary(alpha, s_x, width_c)?;
    Ok((scene, frame, t_c))
}

/// Measure of a segment split against the rectangle: open-interior part,
/// exterior part, and the part lying exactly along an edge.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ClipParts {
    pub inside: f64,
    pub outside: f64,
    pub on_edge: f64,
}

/// Splits segment `ab` into interior / exterior / on-edge measure against the
/// canonical rectangle of `scene`.
pub fn clip_parts(a: Point, b: Point, scene: &CanonicalScene) -> ClipParts {
    let len = a.dist(b);
    if len == 0.0 {
        return ClipParts::default();
    }
    let w = scene.width;
    let tol = GEOM_EPS * len.max(1.0);

    // Collinear-with-edge cases: the overlap with the edge extent travels at
    // the edge weight; the remainder is exterior.
    let span_overlap =
        |lo: f64, hi: f64, elo: f64, ehi: f64| -> f64 { (hi.min(ehi) - lo.max(elo)).max(0.0) };
    if a.y.abs() <= tol && b.y.abs() <= tol {
        let (lo, hi) = (a.x.min(b.x), a.x.max(b.x));
        let on = span_overlap(lo, hi, 0.0, w);
        return ClipParts {
            inside: 0.0,
            outside: len - on,
            on_edge: on,
        };
    }
    if (a.y + 1.0).abs() <= tol && (b.y + 1.0).abs() <= tol {
        let (lo, hi) = (a.x.min(b.x), a.x.max(b.x));
        let on = span_overlap(lo, hi, 0.0, w);
        return ClipParts {
            inside: 0.0,
            outside: len - on,
            on_edge: on,
        };
    }
    if a.x.abs() <= tol && b.x.abs() <= tol {
        let (lo, hi) = (a.y.min(b.y), a.y.max(b.y));
        let on = span_overlap(lo, hi, -1.0, 0.0);
        return ClipParts {
            inside: 0.0,
            outside: len - on,
            on_edge: on,
        };
    }
    if w.is_finite() && (a.x - w).abs() <= tol && (b.x - w).abs() <= tol {
        let (lo, hi) = (a.y.min(b.y), a.y.max(b.y));
        let on = span_overlap(lo, hi, -1.0, 0.0);
        return ClipParts {
            inside: 0.0,
            outside: len - on,
            on_edge: on,
        };
    }

    // Liang-Barsky parametric clip against the closed box.
    let dx = b.x - a.x;
    let dy = b.y - a.y;
    let mut t0 = 0.0f64;
    let mut t1 = 1.0f64;
    let mut clip = |p: f64, q: f64| -> bool {
        // Constraint p*t <= q.
        if p == 0.0 {
            q >= 0.0
        } else {
            let r = q / p;
            if p < 0.0 {
                if r > t1 {
                    return false;
                }
                if r > t0 {
                    t0 = r;
                }
            } else {
                if r < t0 {
                    return false;
                }
                if r < t1 {
                    t1 = r;
                }
            }
            true
        }
    };
    let mut ok = clip(-dx, a.x - 0.0); // x >= 0
    ok = ok && clip(-dy, a.y - (-1.0)); // y >= -1
    ok = ok && clip(dy, 0.0 - a.y); // y <= 0
    if w.is_finite() {
        ok = ok && clip(dx, w - a.x); // x <= w
    }
    let inside = if ok { ((t1 - t0) * len).max(0.0) } else { 0.0 };
    ClipParts {
        inside,
        outside: len - inside,
        on_edge: 0.0,
    }
}

/// Public clip: the on-edge measure is folded into whichever side carries the
/// cheaper weight, so `alpha*inside + outside` prices the segment correctly.
pub fn clip_segment_to_rect(a: Point, b: Point, scene: &CanonicalScene) -> (f64, f64) {
    let parts = clip_parts(a, b, scene);
    if scene.alpha <= 1.0 {
        (parts.inside + parts.on_edge, parts.outside)
    } else {
        (parts.inside, parts.outside + parts.on_edge)
    }
}

/// Weighted length of the straight segment `ab` under the scene's metric.
pub fn weighted_segment_cost(a: Point, b: Point, scene: &CanonicalScene) -> f64 {
    let parts = clip_parts(a, b, scene);
    scene.alpha * parts.inside + parts.outside + scene.edge_weight() * parts.on_edge
}

/// Weighted length of a polyline under the scene's metric.
pub fn polyline_weighted_length(vertices: &[Point], scene: &CanonicalScene) -> Result<f64> {
    if vertices.len() < 2 {
        return Err(Error::DegeneratePolyline);
    }
    let mut total = 0.0;
    for pair in vertices.windows(2) {
        if pair[0].dist(pair[1]) <= ARITH_EPS {
            return Err(Error::DegeneratePolyline);
        }
        total += weighted_segment_cost(pair[0], pair[1], scene);
    }
    Ok(total)
}

/// Weight class of one polyline segment, as assigned by a path construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightClass {
    /// Through the rectangle interior, weight `alpha`.
    Interior,
    /// Through the exterior, weight `1`.
    Exterior,
    /// Along a rectangle edge, weight `min(1, alpha)`.
    Edge,
}

impl WeightClass {
    pub fn weight(self, alpha: f64) -> f64 {
        match self {
            WeightClass::Interior => alpha,
            WeightClass::Exterior => 1.0,
            WeightClass::Edge => alpha.min(1.0),
        }
    }
}

/// A typed path polyline with per-segment weights and its weighted length.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedPolyline {
    pub vertices: Vec<Point>,
    pub segment_weights: Vec<f64>,
    pub total_length: f64,
    classes: Vec<WeightClass>,
}

impl WeightedPolyline {
    /// Builds from vertices and per-segment classes, dropping zero-length
    /// segments (which arise at region boundaries where a vertex degenerates).
    pub fn from_classes(
        vertices: Vec<Point>,
        classes: Vec<WeightClass>,
        alpha: f64,
    ) -> Result<Self> {
        assert_eq!(vertices.len(), classes.len() + 1, "one class per segment");
        let mut vs: Vec<Point> = Vec::with_capacity(vertices.len());
        let mut cs: Vec<WeightClass> = Vec::with_capacity(classes.len());
        vs.push(vertices[0]);
        for (i, &v) in vertices.iter().enumerate().skip(1) {
            if vs.last().unwrap().dist(v) <= 1e-12 {
                continue; // collapsed vertex
            }
            vs.push(v);
            cs.push(classes[i - 1]);
        }
        if vs.len() < 2 {
            return Err(Error::DegeneratePolyline);
        }
        let total = vs
            .windows(2)
            .zip(cs.iter())
            .map(|(p, c)| c.weight(alpha) * p[0].dist(p[1]))
            .sum();
        Ok(WeightedPolyline {
            segment_weights: cs.iter().map(|c| c.weight(alpha)).collect(),
            vertices: vs,
            total_length: total,
            classes: cs,
        })
    }

    pub fn classes(&self) -> &[WeightClass] {
        &self.classes
    }
}

/// The four sides of the canonical rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Bottom,
    Right,
    Top,
}

impl Side {
    pub fn all(scene: &CanonicalScene) -> Vec<Side> {
        if scene.width.is_finite() {
            vec![Side::Left, Side::Bottom, Side::Right, Side::Top]
        } else {
            vec![Side::Left, Side::Bottom, Side::Top]
        }
    }

    /// Endpoints of the side (finite sides only for `Right`).
    pub fn endpoints(self, scene: &CanonicalScene) -> (Point, Point) {
        let w = scene.width;
        match self {
            Side::Left => (Point::new(0.0, 0.0), Point::new(0.0, -1.0)),
            Side::Bottom => (Point::new(0.0, -1.0), Point::new(w, -1.0)),
            Side::Right => (Point::new(w, -1.0), Point::new(w, 0.0)),
            Side::Top => (Point::new(w, 0.0), Point::new(0.0, 0.0)),
        }
    }

    pub fn is_vertical(self) -> bool {
        matches!(self, Side::Left | Side::Right)
    }

    /// Perpendicular distance from `p` to the side's supporting line.
    pub fn dist_to_line(self, p: Point, scene: &CanonicalScene) -> f64 {
        match self {
            Side::Left => p.x.abs(),
            Side::Right => (p.x - scene.width).abs(),
            Side::Top => p.y.abs(),
            Side::Bottom => (p.y + 1.0).abs(),
        }
    }

    /// Foot of the perpendicular from `p` on the side's supporting line.
    pub fn foot(self, p: Point, scene: &CanonicalScene) -> Point {
        match self {
            Side::Left => Point::new(0.0, p.y),
            Side::Right => Point::new(scene.width, p.y),
            Side::Top => Point::new(p.x, 0.0),
            Side::Bottom => Point::new(p.x, -1.0),
        }
    }

    /// Whether `p` lies on the side segment, within `GEOM_EPS`.
    pub fn contains(self, p: Point, scene: &CanonicalScene) -> bool {
        let w = scene.width;
        match self {
            Side::Left => p.x.abs() <= GEOM_EPS && p.y >= -1.0 - GEOM_EPS && p.y <= GEOM_EPS,
            Side::Right => {
                w.is_finite()
                    && (p.x - w).abs() <= GEOM_EPS
                    && p.y >= -1.0 - GEOM_EPS
                    && p.y <= GEOM_EPS
            }
            Side::Top => p.y.abs() <= GEOM_EPS && p.x >= -GEOM_EPS && p.x <= w + GEOM_EPS,
            Side::Bottom => {
                (p.y + 1.0).abs() <= GEOM_EPS && p.x >= -GEOM_EPS && p.x <= w + GEOM_EPS
            }
        }
    }
}

/// Carrier sides of a point (0, 1, or 2 when at a corner).
pub fn carrier_sides(p: Point, scene: &CanonicalScene) -> Vec<Side> {
    Side::all(scene)
        .into_iter()
        .filter(|s| s.contains(p, scene))
        .collect()
}

/// Corners of the canonical rectangle (finite width adds the right pair).
pub fn rect_corners(scene: &CanonicalScene) -> Vec<Point> {
    let mut cs = vec![Point::new(0.0, 0.0), Point::new(0.0, -1.0)];
    if scene.width.is_finite() {
        cs.push(Point::new(scene.width, -1.0));
        cs.push(Point::new(scene.width, 0.0));
    }
    cs
}

pub fn is_corner(p: Point, scene: &CanonicalScene) -> bool {
    rect_corners(scene).iter().any(|&c| c.dist(p) <= GEOM_EPS)
}

/// Checks that the polyline meets each rectangle edge in at most one
/// connected interval (possibly a single point).
pub fn visits_each_edge_once(vertices: &[Point], scene: &CanonicalScene) -> bool {
    for side in Side::all(scene) {
        let mut intervals: Vec<(f64, f64)> = Vec::new();
        for pair in vertices.windows(2) {
            if let Some(iv) = segment_edge_interval(pair[0], pair[1], side, scene) {
                intervals.push(iv);
            }
        }
        if intervals.is_empty() {
            continue;
        }
        intervals.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let mut hi = intervals[0].1;
        for &(lo, h) in &intervals[1..] {
            if lo > hi + GEOM_EPS {
                return false; // disconnected second visit
            }
            hi = hi.max(h);
        }
    }
    true
}

/// Intersection of segment `ab` with one side, as an interval in the side's
/// own parameter (x for horizontal sides, y for vertical ones).
fn segment_edge_interval(
    a: Point,
    b: Point,
    side: Side,
    scene: &CanonicalScene,
) -> Option<(f64, f64)> {
    let w = scene.width;
    let len = a.dist(b);
    let tol = GEOM_EPS * len.max(1.0);
    let (line_coord, a_off, b_off, a_par, b_par, lo, hi) = match side {
        Side::Top => (0.0, a.y, b.y, a.x, b.x, 0.0, w),
        Side::Bottom => (-1.0, a.y, b.y, a.x, b.x, 0.0, w),
        Side::Left => (0.0, a.x, b.x, a.y, b.y, -1.0, 0.0),
        Side::Right => (w, a.x, b.x, a.y, b.y, -1.0, 0.0),
    };
    if matches!(side, Side::Right) && !w.is_finite() {
        return None;
    }
    let da = a_off - line_coord;
    let db = b_off - line_coord;
    if da.abs() <= tol && db.abs() <= tol {
        // Collinear with the edge line: overlap of parameter spans.
        let (p0, p1) = (a_par.min(b_par), a_par.max(b_par));
        let (s0, s1) = (p0.max(lo), p1.min(hi));
        if s0 <= s1 + tol {
            return Some((s0, s1.max(s0)));
        }
        return None;
    }
    if (da > tol && db > tol) || (da < -tol && db < -tol) {
        return None; // strictly one side of the line
    }
    // Transversal crossing (or touching): single parameter point.
    let t = if (da - db).abs() < f64::MIN_POSITIVE {
        0.0
    } else {
        da / (da - db)
    };
    let t = t.clamp(0.0, 1.0);
    let p = a_par + t * (b_par - a_par);
    if p >= lo - tol && p <= hi + tol {
        Some((p, p))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scene06() -> CanonicalScene {
        CanonicalScene::boundary(0.6, 3.0, f64::INFINITY).unwrap()
    }

    #[test]
    fn normalize_uniform_scaling() {
        let rect = Rect::new(0.0, -2.0, 4.0, 0.0).unwrap();
        let (scene, frame, t_c) =
            normalize_scene(rect, Point::new(2.0, 0.0), Point::new(1.0, 3.0), 0.6).unwrap();
        assert!((frame.scale - 2.0).abs() < ARITH_EPS);
        assert!((scene.boundary_sx().unwrap() - 1.0).abs() < ARITH_EPS);
        assert!((t_c.x - 0.5).abs() < ARITH_EPS && (t_c.y - 1.5).abs() < ARITH_EPS);
    }

    #[test]
    fn normalize_bottom_side_half_turn() {
        let rect = Rect::new(0.0, -1.0, 1.0, 0.0).unwrap();
        let (scene, frame, t_c) =
            normalize_scene(rect, Point::new(0.3, -1.0), Point::new(0.5, -2.0), 0.6).unwrap();
        assert_eq!(frame.rotation, 2);
        assert!((scene.boundary_sx().unwrap() - 0.7).abs() < ARITH_EPS);
        assert!((t_c.x - 0.5).abs() < ARITH_EPS && (t_c.y - 1.0).abs() < ARITH_EPS);
    }

    #[test]
    fn normalize_mirror() {
        let rect = Rect::new(0.0, -1.0, 2.0, 0.0).unwrap();
        let (scene, frame, t_c) =
            normalize_scene(rect, Point::new(0.5, 0.0), Point::new(1.5, 0.5), 0.6).unwrap();
        assert!(frame.mirror);
        assert!((scene.boundary_sx().unwrap() - 1.5).abs() < ARITH_EPS);
        assert!((t_c.x - 0.5).abs() < ARITH_EPS && (t_c.y - 0.5).abs() < ARITH_EPS);
    }

    #[test]
    fn normalize_rejects_corner_and_outside() {
        let rect = Rect::new(0.0, -1.0, 2.0, 0.0).unwrap();
        assert_eq!(
            normalize_scene(rect, Point::new(0.0, 0.0), Point::new(1.0, 1.0), 0.6),
            Err(Error::SourceAtCorner)
        );
        assert_eq!(
            normalize_scene(rect, Point::new(-1.0, 1.0), Point::new(1.0, 1.0), 0.6),
            Err(Error::SourceOutsideUnsupported)
        );
        assert!(matches!(
            normalize_scene(rect, Point::new(1.0, 0.0), Point::new(0.0, 1.0), 1.7),
            Err(Error::WeightOutOfRange(_))
        ));
    }

    #[test]
    fn clip_examples() {
        let scene = scene06();
        let (i, o) = clip_segment_to_rect(Point::new(-1.0, 0.5), Point::new(1.0, 0.5), &scene);
        assert!((i, o) == (0.0, 2.0));
        let (i, o) = clip_segment_to_rect(Point::new(0.5, 0.5), Point::new(0.5, -0.5), &scene);
        assert!((i - 0.5).abs() < ARITH_EPS && (o - 0.5).abs() < ARITH_EPS);
        let (i, o) = clip_segment_to_rect(Point::new(-0.5, -0.5), Point::new(1.5, -0.5), &scene);
        assert!((i - 1.5).abs() < ARITH_EPS && (o - 0.5).abs() < ARITH_EPS);
    }

    #[test]
    fn clip_additivity_at_split_point() {
        let scene = scene06();
        let a = Point::new(-0.7, 0.3);
        let b = Point::new(2.2, -1.4);
        let m = Point::new(a.x + 0.37 * (b.x - a.x), a.y + 0.37 * (b.y - a.y));
        let whole = clip_segment_to_rect(a, b, &scene);
        let p1 = clip_segment_to_rect(a, m, &scene);
        let p2 = clip_segment_to_rect(m, b, &scene);
        assert!((whole.0 - p1.0 - p2.0).abs() < ARITH_EPS);
        assert!((whole.1 - p1.1 - p2.1).abs() < ARITH_EPS);
    }

    #[test]
    fn polyline_lengths() {
        let scene = scene06();
        let l = polyline_weighted_length(&[Point::new(3.0, 0.0), Point::new(0.0, 4.0)], &scene)
            .unwrap();
        assert!((l - 5.0).abs() < ARITH_EPS);

        let scene12 = CanonicalScene::boundary(1.2, 1.0, f64::INFINITY).unwrap();
        let l = polyline_weighted_length(&[Point::new(1.0, 0.0), Point::new(1.0, -0.5)], &scene12)
            .unwrap();
        assert!((l - 0.6).abs() < ARITH_EPS);

        // Edge travel at the min weight, then exterior travel: 0.6*1.25 + 1.25.
        let scene2 = CanonicalScene::boundary(0.6, 2.0, f64::INFINITY).unwrap();
        let l = polyline_weighted_length(
            &[
                Point::new(2.0, 0.0),
                Point::new(0.75, 0.0),
                Point::new(0.0, 1.0),
            ],
            &scene2,
        )
        .unwrap();
        assert!((l - 2.0).abs() < ARITH_EPS);

        assert_eq!(
            polyline_weighted_length(&[Point::new(1.0, 0.0), Point::new(1.0, 0.0)], &scene),
            Err(Error::DegeneratePolyline)
        );
    }

    #[test]
    fn snell_context_values() {
        let c = snell_context(0.6).unwrap();
        assert!((c.sin_c - 0.6).abs() < 1e-15);
        assert!((c.cos_c - 0.8).abs() < 1e-15);
        assert!((c.tan_c - 0.75).abs() < 1e-15);

        let c = snell_context(1.25).unwrap();
        assert!((c.sin_c - 0.8).abs() < 1e-15);
        assert!((c.tan_c - 4.0 / 3.0).abs() < 1e-15);

        let c = snell_context(1.2).unwrap();
        assert!((c.tan_c - 1.0 / 0.44f64.sqrt()).abs() < 1e-15);
        assert!((c.sin_c * c.sin_c + c.cos_c * c.cos_c - 1.0).abs() < 1e-15);

        assert!(snell_context(1.0).is_err());
        assert!(snell_context(1.5).is_err());
    }

    #[test]
    fn refract_examples() {
        assert_eq!(refract(0.5, 1.0, 1.0), Refraction::Transmitted(0.5));
        match refract(0.6, 1.2, 1.0) {
            Refraction::Transmitted(s) => assert!((s - 0.72).abs() < 1e-15),
            _ => panic!("expected transmission"),
        }
        assert_eq!(refract(0.9, 1.2, 1.0), Refraction::TotalInternalReflection);
    }

    #[test]
    fn edge_visit_checker() {
        let scene = scene06();
        // Crosses the top edge twice in disjoint points: violates the rule.
        let bad = [
            Point::new(0.5, 0.5),
            Point::new(0.7, -0.2),
            Point::new(1.5, 0.5),
        ];
        assert!(!visits_each_edge_once(&bad, &scene));
        let good = [
            Point::new(3.0, 0.0),
            Point::new(0.0, -0.4),
            Point::new(-1.0, -0.5),
        ];
        assert!(visits_each_edge_once(&good, &scene));
    }

    #[test]
    fn frame_round_trip() {
        let rect = Rect::new(-2.0, 1.0, 3.0, 4.0).unwrap();
        let (_, frame, _) = normalize_scene(
            rect,
            Point::new(-2.0, 2.0), // left side
            Point::new(-4.0, 3.0),
            1.2,
        )
        .unwrap();
        for &p in &[
            Point::new(0.0, 0.0),
            Point::new(1.3, -7.2),
            Point::new(-5.5, 2.25),
        ] {
            let q = frame.to_original(frame.to_canonical(p));
            assert!(p.dist(q) < ARITH_EPS * 10.0);
        }
    }
}
