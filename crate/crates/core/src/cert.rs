//! Verifier for the non-solvability certificate of the two-refraction
//! quadrant configuration: a degree-11 integer polynomial whose factor
//! degree patterns modulo three primes rule out any expression of its real
//! root by rationals, field operations, and k-th roots.
//!
//! The built-in scenario: a quadrant with top-left corner (50, 150) and
//! weight 1.2, source (0, 0), target (200, 200). The polynomial's root in
//! (0, 1) is the sine of the entry angle at the vertical side.

use crate::error::{Error, Result};
use crate::modpoly::{self, ModPolynomial};
use crate::roots::bisect;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Integer polynomial with arbitrary-precision coefficients, ascending degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigPolynomial {
    pub coefficients: Vec<BigInt>,
}

impl BigPolynomial {
    pub fn new(coefficients: Vec<BigInt>) -> Self {
        let mut coefficients = coefficients;
        while coefficients.last().is_some_and(|c| c.is_zero()) {
            coefficients.pop();
        }
        BigPolynomial { coefficients }
    }

    pub fn from_i128(cs: &[i128]) -> Self {
        BigPolynomial::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coefficients.is_empty() {
            None
        } else {
            Some(self.coefficients.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coefficients.last()
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + bigint_to_f64(c))
    }

    /// Scale for relative residuals: sum of |c_i| |x|^i.
    pub fn coefficient_scale(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(i, c)| bigint_to_f64(c).abs() * x.abs().powi(i as i32))
            .sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coefficients.is_empty() || other.coefficients.is_empty() {
            return BigPolynomial::new(vec![]);
        }
        let mut out = vec![BigInt::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        BigPolynomial::new(out)
    }
}

fn bigint_to_f64(c: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or(f64::NAN)
}

/// The degree-11 certificate polynomial `p(u)` for weight 1.2, constant term
/// first.
pub fn certificate_polynomial() -> BigPolynomial {
    BigPolynomial::from_i128(&[
        -5_602_195_930_320_001,
        93_511_401_766_200_000,
        -713_160_370_741_499_900,
        3_259_398_736_514_250_000,
        -9_869_397_269_940_000_000,
        20_717_559_301_050_000_000,
        -30_701_172_521_250_000_000,
        32_082_903_984_375_000_000,
        -23_159_988_281_250_000_000,
        10_999_072_265_625_000_000,
        -3_093_750_000_000_000_000,
        390_625_000_000_000_000,
    ])
}

/// Coefficient-wise reduction modulo a prime. The degree is preserved
/// whenever the prime does not divide the leading coefficient (true for all
/// certificate primes); otherwise the reduction simply has lower degree.
pub fn reduce_mod(p: &BigPolynomial, q: u64) -> Result<ModPolynomial> {
    let qi = BigInt::from(q);
    let coefficients = p
        .coefficients
        .iter()
        .map(|c| {
            let mut r = c % &qi;
            if r.is_negative() {
                r += &qi;
            }
            let (_, digits) = r.to_u64_digits();
            digits.first().copied().unwrap_or(0)
        })
        .collect();
    Ok(ModPolynomial::new(q, coefficients))
}

/// Separability modulo `q`: gcd(p, p') is constant. Equivalent to `q` not
/// dividing the discriminant when the leading coefficient survives, which
/// this check requires.
pub fn separable_mod(p: &BigPolynomial, q: u64) -> Result<bool> {
    let qi = BigInt::from(q);
    let lead = p.leading().ok_or(Error::LeadingCoefficientVanishes(q))?;
    if (lead % &qi).is_zero() {
        return Err(Error::LeadingCoefficientVanishes(q));
    }
    let pm = reduce_mod(p, q)?;
    Ok(modpoly::is_squarefree(&pm))
}

/// Residual of the horizontal-span equation in terms of the entry sine `u`:
/// `sqrt(alpha^2 - u^2) * (3/u - 1/sqrt(1-u^2) + 1/sqrt(1-alpha^2+u^2)) - 3`.
pub fn span_equation_residual(u: f64, alpha: f64) -> Result<f64> {
    if !(u > 0.0 && u < 1.0 && u < alpha) {
        return Err(Error::DomainViolation);
    }
    let inner = 1.0 - alpha * alpha + u * u;
    if inner <= 0.0 {
        return Err(Error::DomainViolation);
    }
    let lead = (alpha * alpha - u * u).sqrt();
    Ok(lead * (3.0 / u - 1.0 / (1.0 - u * u).sqrt() + 1.0 / inner.sqrt()) - 3.0)
}

/// Certificate weight and scenario constants.
pub const CERT_ALPHA: f64 = 1.2;
pub const CERT_PRIMES: [u64; 3] = [59, 37, 17];
/// Expected irreducible factor degree patterns for the three primes.
pub const CERT_PATTERNS: [&[usize]; 3] = [&[11], &[1, 10], &[2, 9]];

/// Everything the verifier establishes, with per-component results.
#[derive(Debug, Clone)]
pub struct CertificateReport {
    /// Prime -> multiset of irreducible factor degrees.
    pub degree_patterns: Vec<(u64, Vec<usize>)>,
    /// Prime -> separability of the reduction.
    pub separable: Vec<(u64, bool)>,
    /// Root of the span equation in (0, 1).
    pub snell_root: f64,
    /// |p(u*)| / sum_i |c_i| |u*|^i.
    pub polynomial_residual_at_root: f64,
    /// |horizontal span - 200| at the reconstructed crossing.
    pub span_residual: f64,
    pub pass: bool,
    pub failures: Vec<String>,
}

/// Runs the full verification with the default primes 59 / 37 / 17.
pub fn verify_certificate() -> CertificateReport {
    verify_certificate_with_primes(CERT_PRIMES)
}

/// Verification with substituted primes; patterns are still required to be
/// {11}, {1,10}, {2,9}, so a wrong prime reports a mismatch.
pub fn verify_certificate_with_primes(primes: [u64; 3]) -> CertificateReport {
    let p = certificate_polynomial();
    let alpha = CERT_ALPHA;
    let mut failures = Vec::new();

    let mut degree_patterns = Vec::new();
    let mut separable = Vec::new();
    for (idx, &q) in primes.iter().enumerate() {
        match separable_mod(&p, q) {
            Ok(sep) => {
                separable.push((q, sep));
                if !sep {
                    failures.push(format!("reduction mod {q} is not squarefree"));
                    degree_patterns.push((q, vec![]));
                    continue;
                }
                match reduce_mod(&p, q).and_then(|pm| modpoly::factor_degrees(&pm)) {
                    Ok(pattern) => {
                        if pattern != CERT_PATTERNS[idx] {
                            failures.push(format!(
                                "factor degrees mod {q}: got {pattern:?}, expected {:?}",
                                CERT_PATTERNS[idx]
                            ));
                        }
                        degree_patterns.push((q, pattern));
                    }
                    Err(e) => {
                        failures.push(format!("factorization mod {q} failed: {e}"));
                        degree_patterns.push((q, vec![]));
                    }
                }
            }
            Err(e) => {
                failures.push(format!("reduction mod {q} failed: {e}"));
                separable.push((q, false));
                degree_patterns.push((q, vec![]));
            }
        }
    }

    // Root of the span equation, bracketed inside its real domain.
    let u_min = (alpha * alpha - 1.0).max(0.0).sqrt();
    let lo = (u_min + 1e-9).max(0.01);
    let snell_root = bisect(
        |u| span_equation_residual(u, alpha).unwrap_or(f64::NAN),
        lo,
        0.99,
    )
    .unwrap_or(f64::NAN);
    if !snell_root.is_finite() {
        failures.push("span-equation root not bracketed".to_string());
    }

    let polynomial_residual_at_root = if snell_root.is_finite() {
        p.eval_f64(snell_root).abs() / p.coefficient_scale(snell_root)
    } else {
        f64::INFINITY
    };
    if polynomial_residual_at_root.is_nan() || polynomial_residual_at_root > 1e-6 {
        failures.push(format!(
            "scaled polynomial residual {polynomial_residual_at_root:.3e} exceeds 1e-6"
        ));
    }

    // Horizontal-span identity at the reconstructed crossing (50, 50 tan th1).
    let span_residual = if snell_root.is_finite() {
        let u = snell_root;
        let y = 50.0 * u / (1.0 - u * u).sqrt();
        let sin_t1p = u / alpha;
        let tan_t1p = sin_t1p / (1.0 - sin_t1p * sin_t1p).sqrt();
        let cos_t2p = (alpha * alpha - u * u).sqrt();
        let tan_t2p = (1.0 - cos_t2p * cos_t2p).sqrt() / cos_t2p;
        (50.0 + (150.0 - y) / tan_t1p + 50.0 / tan_t2p - 200.0).abs()
    } else {
        f64::INFINITY
    };
    if span_residual.is_nan() || span_residual > 1e-8 {
        failures.push(format!(
            "span identity residual {span_residual:.3e} exceeds 1e-8"
        ));
    }

    CertificateReport {
        degree_patterns,
        separable,
        snell_root,
        polynomial_residual_at_root,
        span_residual,
        pass: failures.is_empty(),
        failures,
    }
}
