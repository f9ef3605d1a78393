//! Bracketed 1-D root finding and golden-section minimization.

use crate::error::{Error, Result};

/// Bisection on a bracketing interval. Converges to floating-point
/// resolution; errors if `f` has no sign change on `[a, b]`.
pub fn bisect(f: impl Fn(f64) -> f64, a: f64, b: f64) -> Result<f64> {
    let (mut lo, mut hi) = if a <= b { (a, b) } else { (b, a) };
    let flo = f(lo);
    if flo == 0.0 {
        return Ok(lo);
    }
    let fhi = f(hi);
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo * fhi > 0.0 || flo.is_nan() || fhi.is_nan() {
        return Err(Error::RootSolveFailure);
    }
    let mut flo = flo;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // interval at floating-point resolution
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if flo * fm < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    Ok(0.5 * (lo + hi))
}

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for the minimum of a unimodal `f` on `[a, b]`.
/// Returns `(x_min, f_min)`.
pub fn golden_min(f: impl Fn(f64) -> f64, a: f64, b: f64, max_iter: usize) -> (f64, f64) {
    let (mut a, mut b) = if a <= b { (a, b) } else { (b, a) };
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..max_iter {
        if (b - a).abs() <= 1e-15 * (1.0 + a.abs() + b.abs()) {
            break;
        }
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    let xm = 0.5 * (a + b);
    let fm = f(xm);
    if f1 <= f2 && f1 <= fm {
        (x1, f1)
    } else if f2 <= fm {
        (x2, f2)
    } else {
        (xm, fm)
    }
}

/// Golden-section search followed by one centered parabolic polish step.
///
/// Pure function-value minimization localizes a quadratic minimum only to
/// about sqrt(machine epsilon); the parabolic step with a wide stencil
/// recovers several more digits without consulting derivatives.
pub fn golden_parabolic_min(f: impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let (x0, _) = golden_min(&f, a, b, 80);
    let scale = 1.0 + a.abs().max(b.abs());
    let mut x = x0;
    for k in 0..2 {
        let h = 1e-5 * scale / (10f64).powi(k);
        let (fm, f0, fp) = (f(x - h), f(x), f(x + h));
        let denom = fp - 2.0 * f0 + fm;
        if denom > 0.0 {
            let step = 0.5 * h * (fm - fp) / denom;
            if step.abs() <= h {
                x += step;
            }
        }
    }
    let x = x.clamp(a.min(b), a.max(b));
    (x, f(x))
}
