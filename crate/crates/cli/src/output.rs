//! Serialized output schemas. JSON numbers use the shortest decimal form
//! that round-trips the underlying doubles exactly; text output prints 17
//! significant digits for the same reason.

use serde::Serialize;
use wrp_core::cert::CertificateReport;
use wrp_core::spm::{BisectorCurve, CurveForm};
use wrp_core::{FrameTransform, QueryAnswer};

#[derive(Serialize)]
pub struct FrameJson {
    pub translation: [f64; 2],
    pub rotation_quarter_turns: u8,
    pub mirror: bool,
    pub scale: f64,
}

impl From<FrameTransform> for FrameJson {
    fn from(f: FrameTransform) -> Self {
        FrameJson {
            translation: [f.translation.0, f.translation.1],
            rotation_quarter_turns: f.rotation,
            mirror: f.mirror,
            scale: f.scale,
        }
    }
}

#[derive(Serialize)]
pub struct QueryResultJson {
    #[serde(rename = "type")]
    pub path_type: u8,
    pub length: f64,
    pub vertices: Vec<[f64; 2]>,
    pub segment_weights: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_root: Option<f64>,
    pub frame: FrameJson,
}

impl From<&QueryAnswer> for QueryResultJson {
    fn from(a: &QueryAnswer) -> Self {
        QueryResultJson {
            path_type: a.path_type.index(),
            length: a.length,
            vertices: a.vertices.iter().map(|p| [p.x, p.y]).collect(),
            segment_weights: a.segment_weights.clone(),
            witness_root: a.witness,
            frame: a.frame.into(),
        }
    }
}

pub fn query_text(a: &QueryAnswer) -> String {
    let mut out = String::new();
    out.push_str(&format!("type: {}\n", a.path_type.index()));
    out.push_str(&format!("length: {:.16e}\n", a.length));
    out.push_str("vertices:\n");
    for (i, v) in a.vertices.iter().enumerate() {
        out.push_str(&format!("  [{:.16e}, {:.16e}]", v.x, v.y));
        if i + 1 < a.vertices.len() {
            out.push_str(&format!("  weight {:.16e}", a.segment_weights[i]));
        }
        out.push('\n');
    }
    if let Some(w) = a.witness {
        out.push_str(&format!("witness_root (canonical frame): {:.16e}\n", w));
    }
    out
}

#[derive(Serialize)]
pub struct PrimeDegrees {
    pub prime: u64,
    pub degrees: Vec<usize>,
}

#[derive(Serialize)]
pub struct PrimeSeparable {
    pub prime: u64,
    pub separable: bool,
}

#[derive(Serialize)]
pub struct CertificateJson {
    pub degree_patterns: Vec<PrimeDegrees>,
    pub separable: Vec<PrimeSeparable>,
    pub snell_root: f64,
    pub polynomial_residual_at_root: f64,
    pub span_residual: f64,
    pub verdict: &'static str,
    pub failures: Vec<String>,
}

impl From<&CertificateReport> for CertificateJson {
    fn from(r: &CertificateReport) -> Self {
        CertificateJson {
            degree_patterns: r
                .degree_patterns
                .iter()
                .map(|(prime, degrees)| PrimeDegrees {
                    prime: *prime,
                    degrees: degrees.clone(),
                })
                .collect(),
            separable: r
                .separable
                .iter()
                .map(|&(prime, separable)| PrimeSeparable { prime, separable })
                .collect(),
            snell_root: r.snell_root,
            polynomial_residual_at_root: r.polynomial_residual_at_root,
            span_residual: r.span_residual,
            verdict: if r.pass { "pass" } else { "fail" },
            failures: r.failures.clone(),
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CurveFormJson {
    HorizontalLine { y: f64 },
    VerticalLine { x: f64 },
    Affine { slope: f64, intercept: f64 },
    SqrtCurve { a: f64, b: f64, c: f64 },
    Sampled,
}

#[derive(Serialize)]
pub struct CurveJson {
    pub pair: [u8; 2],
    pub form: CurveFormJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub domain: Option<[f64; 2]>,
    pub samples: Vec<[f64; 2]>,
}

pub fn curve_json(curve: &BisectorCurve, samples: Vec<[f64; 2]>) -> CurveJson {
    let form = match &curve.form {
        CurveForm::HorizontalLine { y } => CurveFormJson::HorizontalLine { y: *y },
        CurveForm::VerticalLine { x } => CurveFormJson::VerticalLine { x: *x },
        CurveForm::Affine { slope, intercept } => CurveFormJson::Affine {
            slope: *slope,
            intercept: *intercept,
        },
        CurveForm::SqrtCurve { a, b, c } => CurveFormJson::SqrtCurve {
            a: *a,
            b: *b,
            c: *c,
        },
        CurveForm::Sampled { .. } => CurveFormJson::Sampled,
    };
    CurveJson {
        pair: [curve.pair.0, curve.pair.1],
        form,
        domain: curve.domain.map(|(lo, hi)| [lo, hi]),
        samples,
    }
}

#[derive(Serialize)]
pub struct SpmJson {
    pub alpha: f64,
    pub source: [f64; 2],
    pub width: f64,
    pub curves: Vec<CurveJson>,
}
