//! SVG rendering of the shortest path map: region shading from the
//! classification grid, the rectangle outline, and every bisector polyline.

use wrp_core::geometry::{CanonicalScene, Point, Rect};
use wrp_core::spm::{BisectorCurve, SpmGrid};

const VIEW: f64 = 900.0;

/// Fill colors per path type 1..=13.
const PALETTE: [&str; 13] = [
    "#a6cee3", "#1f78b4", "#b2df8a", "#33a02c", "#fb9a99", "#e31a1c", "#fdbf6f", "#ff7f00",
    "#cab2d6", "#6a3d9a", "#ffff99", "#b15928", "#8dd3c7",
];

pub struct SvgMap {
    bbox: Rect,
    scale: f64,
    body: String,
}

impl SvgMap {
    pub fn new(bbox: Rect) -> Self {
        SvgMap {
            bbox,
            scale: VIEW / bbox.width().max(bbox.height()),
            body: String::new(),
        }
    }

    fn px(&self, p: Point) -> (f64, f64) {
        (
            (p.x - self.bbox.x0) * self.scale,
            (self.bbox.y1 - p.y) * self.scale,
        )
    }

    pub fn shade(&mut self, grid: &SpmGrid) {
        let cw = grid.bbox.width() / grid.n as f64 * self.scale;
        let ch = grid.bbox.height() / grid.n as f64 * self.scale;
        for iy in 0..grid.n {
            for ix in 0..grid.n {
                let ty = grid.at(ix, iy) as usize;
                let c = grid.center(ix, iy);
                let (px, py) = self.px(Point::new(
                    c.x - 0.5 * grid.bbox.width() / grid.n as f64,
                    c.y + 0.5 * grid.bbox.height() / grid.n as f64,
                ));
                let color = PALETTE[(ty - 1).min(12)];
                self.body.push_str(&format!(
                    "<rect x=\"{px:.2}\" y=\"{py:.2}\" width=\"{cw:.2}\" height=\"{ch:.2}\" \
                     fill=\"{color}\" fill-opacity=\"0.55\" stroke=\"none\"/>\n"
                ));
            }
        }
    }

    pub fn rectangle(&mut self, scene: &CanonicalScene) {
        let w = if scene.width.is_finite() {
            scene.width
        } else {
            self.bbox.x1 + 1.0
        };
        let (x0, y0) = self.px(Point::new(0.0, 0.0));
        let (x1, y1) = self.px(Point::new(w, -1.0));
        self.body.push_str(&format!(
            "<rect x=\"{x0:.2}\" y=\"{y0:.2}\" width=\"{:.2}\" height=\"{:.2}\" \
             fill=\"none\" stroke=\"#000\" stroke-width=\"2\"/>\n",
            x1 - x0,
            y1 - y0
        ));
    }

    pub fn polyline(&mut self, points: &[Point], label: (u8, u8)) {
        if points.len() < 2 {
            return;
        }
        let coords: Vec<String> = points
            .iter()
            .map(|&p| {
                let (x, y) = self.px(p);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        self.body.push_str(&format!(
            "<polyline points=\"{}\" fill=\"none\" stroke=\"#222\" stroke-width=\"1.5\" \
             data-pair=\"{},{}\"/>\n",
            coords.join(" "),
            label.0,
            label.1
        ));
    }

    pub fn source_marker(&mut self, s: Point) {
        let (x, y) = self.px(s);
        self.body.push_str(&format!(
            "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"4\" fill=\"#000\"/>\n"
        ));
    }

    pub fn finish(self) -> String {
        let w = self.bbox.width() * self.scale;
        let h = self.bbox.height() * self.scale;
        format!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
             <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
             width=\"{w:.0}\" height=\"{h:.0}\" viewBox=\"0 0 {w:.2} {h:.2}\">\n\
             <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n{}</svg>\n",
            self.body
        )
    }
}

/// Samples a curve for rendering: at least 128 points across the bounding
/// box for closed forms; sampled loci render their own points.
pub fn render_samples(curve: &BisectorCurve, scene: &CanonicalScene, bbox: Rect) -> Vec<Point> {
    use wrp_core::spm::CurveForm;
    match &curve.form {
        CurveForm::Sampled { points } => points.clone(),
        CurveForm::VerticalLine { x } => {
            let (lo, hi) = curve.domain.unwrap_or((bbox.y0, bbox.y1));
            let lo = lo.max(bbox.y0);
            let hi = hi.min(bbox.y1);
            (0..256)
                .map(|i| Point::new(*x, lo + (hi - lo) * i as f64 / 255.0))
                .filter(|p| p.y >= bbox.y0 && p.y <= bbox.y1)
                .collect()
        }
        _ => {
            let Some((lo, hi)) = curve.domain else {
                return Vec::new();
            };
            let lo = lo.max(bbox.x0);
            let hi = hi.min(bbox.x1);
            if hi <= lo {
                return Vec::new();
            }
            // Locate the visible sub-interval first so the polyline always
            // carries full sampling density inside the viewport.
            let visible = |x: f64| {
                curve
                    .y_at(x, scene)
                    .is_some_and(|y| y >= bbox.y0 && y <= bbox.y1)
            };
            let mut vlo = f64::INFINITY;
            let mut vhi = f64::NEG_INFINITY;
            for i in 0..=512 {
                let x = lo + (hi - lo) * i as f64 / 512.0;
                if visible(x) {
                    vlo = vlo.min(x);
                    vhi = vhi.max(x);
                }
            }
            if vlo > vhi {
                return Vec::new();
            }
            (0..256)
                .filter_map(|i| {
                    let x = vlo + (vhi - vlo) * i as f64 / 255.0;
                    curve
                        .y_at(x, scene)
                        .map(|y| Point::new(x, y))
                        .filter(|p| p.y >= bbox.y0 - 1e-9 && p.y <= bbox.y1 + 1e-9)
                })
                .collect()
        }
    }
}
