//! Shortest-path-map machinery: the closed-form bisector catalog for a
//! boundary source, point classification, numeric equal-length loci for the
//! pairs that admit no closed form, and grid sampling.

use crate::error::{Error, Result};
use crate::geometry::{CanonicalScene, Point, Rect, SourceLocation};
use crate::interior;
use crate::paths::{self, PathSolution, PathType};
use crate::roots::bisect;

/// Shape of one bisector curve.
#[derive(Debug, Clone, PartialEq)]
pub enum CurveForm {
    HorizontalLine {
        y: f64,
    },
    VerticalLine {
        x: f64,
    },
    Affine {
        slope: f64,
        intercept: f64,
    },
    /// `y = a*(anchor + x) + b*sqrt(anchor * x) + c`, anchored at the
    /// source's x-coordinate.
    SqrtCurve {
        a: f64,
        b: f64,
        c: f64,
    },
    /// Numerically sampled equal-length locus.
    Sampled {
        points: Vec<Point>,
    },
}

/// Boundary curve between the cells of two path types.
#[derive(Debug, Clone, PartialEq)]
pub struct BisectorCurve {
    pub pair: (u8, u8),
    pub form: CurveForm,
    /// Validity interval: x-range for function-of-x forms, y-range for the
    /// vertical line. `None` marks an empirically empty locus.
    pub domain: Option<(f64, f64)>,
}

impl BisectorCurve {
    /// Curve ordinate at `x`, `None` outside the domain or for forms that are
    /// not functions of x.
    pub fn y_at(&self, x: f64, scene: &CanonicalScene) -> Option<f64> {
        let (lo, hi) = self.domain?;
        if x < lo - 1e-12 || x > hi + 1e-12 {
            return None;
        }
        let anchor = scene.source_point().x;
        match &self.form {
            CurveForm::HorizontalLine { y } => Some(*y),
            CurveForm::VerticalLine { .. } => None,
            CurveForm::Affine { slope, intercept } => Some(slope * x + intercept),
            CurveForm::SqrtCurve { a, b, c } => {
                if x < 0.0 {
                    None
                } else {
                    Some(a * (anchor + x) + b * (anchor * x).sqrt() + c)
                }
            }
            CurveForm::Sampled { .. } => None,
        }
    }
}

/// Closed-form bisector catalog for a source on the top boundary.
///
/// Below weight 1 the catalog has six entries; above it, seven. The (3, 9)
/// entry is listed with an empty domain: the single-refraction cell always
/// separates cells 3 and 9, so their equal-length locus on the line `y = 0`
/// is empty (checked empirically by the test suite).
pub fn bisector_catalog(scene: &CanonicalScene) -> Result<Vec<BisectorCurve>> {
    let s_x = scene
        .boundary_sx()
        .map_err(|_| Error::SourceNotOnBoundary)?;
    let a = scene.alpha;
    let inf = f64::INFINITY;
    if a < 1.0 {
        let q = (1.0 - a * a).sqrt();
        Ok(vec![
            BisectorCurve {
                pair: (1, 2),
                form: CurveForm::Affine {
                    slope: -q / a,
                    intercept: q / a * s_x,
                },
                domain: Some((-inf, s_x)),
            },
            BisectorCurve {
                pair: (2, 3),
                form: CurveForm::Affine {
                    slope: -q / a,
                    intercept: 0.0,
                },
                domain: Some((-inf, 0.0)),
            },
            BisectorCurve {
                pair: (3, 6),
                form: CurveForm::HorizontalLine { y: 0.0 },
                domain: Some((-inf, 0.0)),
            },
            BisectorCurve {
                pair: (3, 9),
                form: CurveForm::HorizontalLine { y: 0.0 },
                domain: None,
            },
            BisectorCurve {
                pair: (6, 9),
                form: CurveForm::Affine {
                    slope: a / (s_x * s_x + 1.0 - a * a).sqrt(),
                    intercept: -1.0,
                },
                domain: Some((-inf, 0.0)),
            },
            BisectorCurve {
                pair: (9, 10),
                form: CurveForm::Affine {
                    slope: (1.0 + (1.0 - a * a) * s_x * s_x).sqrt() / (a * s_x),
                    intercept: -1.0,
                },
                domain: Some((-inf, 0.0)),
            },
        ])
    } else {
        let sb = (a * a - 1.0).sqrt();
        let s2a = (2.0 - a * a).sqrt();
        // Domain of the square-root curve: where it stays above the bottom edge.
        let sqrt_dom = {
            let disc = (a * a - 1.0) * s_x + sb;
            let r = -a * s_x.sqrt() + disc.sqrt();
            if r >= 0.0 {
                Some((0.0, r * r))
            } else {
                None
            }
        };
        Ok(vec![
            BisectorCurve {
                pair: (1, 4),
                form: CurveForm::HorizontalLine { y: 0.0 },
                domain: Some((-inf, 0.0)),
            },
            BisectorCurve {
                pair: (4, 5),
                form: CurveForm::Affine {
                    slope: sb / s2a,
                    intercept: 0.0,
                },
                domain: Some((-inf, 0.0)),
            },
            BisectorCurve {
                pair: (5, 6),
                form: CurveForm::Affine {
                    slope: sb / s2a,
                    intercept: -sb * s_x,
                },
                domain: Some((-inf, 0.0)),
            },
            BisectorCurve {
                pair: (6, 7),
                form: CurveForm::VerticalLine { x: 0.0 },
                domain: Some((-inf, -1.0)),
            },
            BisectorCurve {
                pair: (7, 8),
                form: CurveForm::Affine {
                    slope: -s2a / sb,
                    intercept: -1.0,
                },
                domain: Some((0.0, inf)),
            },
            BisectorCurve {
                pair: (11, 12),
                form: CurveForm::Affine {
                    slope: sb,
                    intercept: -sb * s_x,
                },
                domain: Some(((s_x - 1.0 / sb).max(0.0), s_x)),
            },
            BisectorCurve {
                pair: (12, 13),
                form: CurveForm::SqrtCurve {
                    a: -1.0 / sb,
                    b: -2.0 * a / sb,
                    c: 0.0,
                },
                domain: sqrt_dom,
            },
        ])
    }
}

/// Curve ordinate for a cataloged pair (boundary source). `Ok(None)` means
/// the value is undefined there (outside the domain, or a vertical line).
pub fn bisector_y(i: u8, j: u8, x: f64, scene: &CanonicalScene) -> Result<Option<f64>> {
    let catalog = bisector_catalog(scene)?;
    let curve = catalog
        .iter()
        .find(|c| c.pair == (i, j) || c.pair == (j, i))
        .ok_or(Error::PairNotInCatalog(i, j))?;
    Ok(curve.y_at(x, scene))
}

/// Path-type classification of a target point.
pub fn classify(scene: &CanonicalScene, t: Point) -> Result<PathType> {
    solve(scene, t).map(|s| s.path_type)
}

fn solve(scene: &CanonicalScene, t: Point) -> Result<PathSolution> {
    match scene.source {
        SourceLocation::OnTopBoundary { .. } => paths::shortest_path(scene, t),
        SourceLocation::Interior(_) => interior::shortest_path_interior(scene, t),
    }
}

/// Equal-length locus between two candidate-length functions, sampled by
/// vertical scanlines: for each `x` the sign change of the difference is
/// bracketed and refined by bisection.
pub fn sample_equal_length_locus(
    len_i: &dyn Fn(Point) -> Option<f64>,
    len_j: &dyn Fn(Point) -> Option<f64>,
    xs: &[f64],
    y_range: (f64, f64),
    scan_steps: usize,
) -> Vec<Point> {
    let mut points = Vec::new();
    let diff_at = |x: f64, y: f64| -> Option<f64> {
        let p = Point::new(x, y);
        Some(len_i(p)? - len_j(p)?)
    };
    for &x in xs {
        let (y0, y1) = y_range;
        let mut prev: Option<(f64, f64)> = None;
        for k in 0..=scan_steps {
            let y = y0 + (y1 - y0) * k as f64 / scan_steps as f64;
            let d = diff_at(x, y);
            if let (Some((py, pd)), Some(d)) = (prev, d) {
                if pd == 0.0 || pd * d < 0.0 {
                    if let Ok(y_root) = bisect(|y| diff_at(x, y).unwrap_or(f64::NAN), py, y) {
                        if let Some(res) = diff_at(x, y_root) {
                            if res.abs() <= 1e-7 {
                                points.push(Point::new(x, y_root));
                            }
                        }
                    }
                }
            }
            prev = d.map(|d| (y, d));
        }
    }
    points
}

/// Feasible closed-form length of a boundary-source type, `None` when the
/// type does not reconstruct at `t`.
pub fn boundary_feasible_length(ty: u8, scene: &CanonicalScene, t: Point) -> Option<f64> {
    let ty = PathType::new(ty).ok()?;
    paths::build_solution(ty, scene, t).ok().map(|s| s.length)
}

/// Bisector catalog for an interior source, in the canonical bottom-left
/// picture. Curves involving single refraction through the bottom edge
/// (label 10) have no closed form and are emitted as sampled polylines.
pub fn interior_catalog(scene: &CanonicalScene) -> Result<Vec<BisectorCurve>> {
    let p = match scene.source {
        SourceLocation::Interior(p) => p,
        SourceLocation::OnTopBoundary { .. } => return Err(Error::SourceNotInside),
    };
    let a = scene.alpha;
    let inf = f64::INFINITY;
    let corner = Point::new(0.0, -1.0);
    let x_lo = -3.0 * (1.0 + p.x);
    let y_lo = -3.0 - p.x;
    let scan_xs = |lo: f64, hi: f64| -> Vec<f64> {
        (0..160)
            .map(|i| lo + (hi - lo) * (i as f64 + 0.5) / 160.0)
            .collect()
    };
    let fam = |label: u8| move |t: Point| interior::family_length(scene, t, label);

    if a < 1.0 {
        // Exit ray of the corner-pinned left-edge refraction.
        let sin_in = (p.y + 1.0) / p.dist(corner);
        let sin_out = a * sin_in;
        let slope = sin_out / (1.0 - sin_out * sin_out).sqrt();
        let b69 = BisectorCurve {
            pair: (6, 9),
            form: CurveForm::Affine {
                slope,
                intercept: -1.0,
            },
            domain: Some((-inf, 0.0)),
        };
        let b610 = BisectorCurve {
            pair: (6, 10),
            form: CurveForm::Sampled {
                points: sample_equal_length_locus(
                    &fam(6),
                    &fam(10),
                    &scan_xs(x_lo, -0.02),
                    (y_lo, -1.02),
                    200,
                ),
            },
            domain: Some((x_lo, -0.02)),
        };
        let b910 = BisectorCurve {
            pair: (9, 10),
            form: CurveForm::Sampled {
                points: sample_equal_length_locus(
                    &fam(9),
                    &fam(10),
                    &scan_xs(x_lo, -0.02),
                    (y_lo, -1.02),
                    200,
                ),
            },
            domain: Some((x_lo, -0.02)),
        };
        Ok(vec![b69, b610, b910])
    } else {
        let sb = (a * a - 1.0).sqrt();
        let s2a = (2.0 - a * a).sqrt();
        let sqrt_dom = {
            let disc = (a * a - 1.0) * p.x + sb * (1.0 + p.y);
            if disc > a * a * p.x {
                let r = -a * p.x.sqrt() + disc.sqrt();
                Some((0.0, r * r))
            } else {
                None
            }
        };
        Ok(vec![
            BisectorCurve {
                pair: (6, 7),
                form: CurveForm::VerticalLine { x: 0.0 },
                domain: Some((-inf, -1.0)),
            },
            BisectorCurve {
                pair: (7, 8),
                form: CurveForm::Affine {
                    slope: -s2a / sb,
                    intercept: -1.0,
                },
                domain: Some((0.0, inf)),
            },
            BisectorCurve {
                pair: (6, 10),
                form: CurveForm::Sampled {
                    points: sample_equal_length_locus(
                        &fam(6),
                        &fam(10),
                        &scan_xs(x_lo, -0.02),
                        (y_lo, -1.02),
                        200,
                    ),
                },
                domain: Some((x_lo, -0.02)),
            },
            BisectorCurve {
                pair: (7, 10),
                form: CurveForm::Sampled {
                    points: sample_equal_length_locus(
                        &fam(7),
                        &fam(10),
                        &scan_xs(x_lo, p.x.max(0.5)),
                        (y_lo, -1.02),
                        200,
                    ),
                },
                domain: Some((x_lo, p.x.max(0.5))),
            },
            BisectorCurve {
                pair: (8, 10),
                form: CurveForm::Sampled {
                    points: sample_equal_length_locus(
                        &fam(8),
                        &fam(10),
                        &scan_xs(x_lo, p.x.max(0.5)),
                        (y_lo, -1.02),
                        200,
                    ),
                },
                domain: Some((x_lo, p.x.max(0.5))),
            },
            BisectorCurve {
                pair: (12, 13),
                form: CurveForm::SqrtCurve {
                    a: -1.0 / sb,
                    b: -2.0 * a / sb,
                    c: p.y,
                },
                domain: sqrt_dom,
            },
        ])
    }
}

/// Classification grid over a bounding box: `n x n` types evaluated at the
/// cell centers, row-major with row 0 at the bottom of the box.
#[derive(Debug, Clone)]
pub struct SpmGrid {
    pub n: usize,
    pub bbox: Rect,
    pub types: Vec<u8>,
}

impl SpmGrid {
    pub fn at(&self, ix: usize, iy: usize) -> u8 {
        self.types[iy * self.n + ix]
    }

    pub fn center(&self, ix: usize, iy: usize) -> Point {
        Point::new(
            self.bbox.x0 + (ix as f64 + 0.5) / self.n as f64 * self.bbox.width(),
            self.bbox.y0 + (iy as f64 + 0.5) / self.n as f64 * self.bbox.height(),
        )
    }
}

/// Deterministic classification grid; each value is `classify` at the cell
/// center.
pub fn sample_spm_grid(scene: &CanonicalScene, bbox: Rect, n: usize) -> Result<SpmGrid> {
    if n < 2 || bbox.width() <= 0.0 || bbox.height() <= 0.0 {
        return Err(Error::EmptyBbox);
    }
    let mut types = Vec::with_capacity(n * n);
    let s = scene.source_point();
    for iy in 0..n {
        for ix in 0..n {
            let c = Point::new(
                bbox.x0 + (ix as f64 + 0.5) / n as f64 * bbox.width(),
                bbox.y0 + (iy as f64 + 0.5) / n as f64 * bbox.height(),
            );
            let ty = if c.dist(s) <= 1e-12 {
                if scene.contains_strict(c) {
                    12
                } else {
                    1
                }
            } else {
                classify(scene, c)?.index()
            };
            types.push(ty);
        }
    }
    Ok(SpmGrid { n, bbox, types })
}

/// One cell of the shortest path map: a path type together with the catalog
/// curves that bound its cell.
#[derive(Debug, Clone)]
pub struct SpmCell {
    pub path_type: PathType,
    pub bounding: Vec<BisectorCurve>,
}

/// Cells of the boundary-source map, assembled from the catalog.
pub fn spm_cells(scene: &CanonicalScene) -> Result<Vec<SpmCell>> {
    let catalog = bisector_catalog(scene)?;
    let mut present: Vec<u8> = catalog.iter().flat_map(|c| [c.pair.0, c.pair.1]).collect();
    present.sort_unstable();
    present.dedup();
    Ok(present
        .into_iter()
        .map(|idx| SpmCell {
            path_type: PathType::new(idx).expect("catalog indices are valid"),
            bounding: catalog
                .iter()
                .filter(|c| c.pair.0 == idx || c.pair.1 == idx)
                .cloned()
                .collect(),
        })
        .collect())
}
