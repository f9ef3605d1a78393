//! Dense univariate polynomial arithmetic over a small prime field, with
//! distinct-degree and equal-degree factorization for squarefree inputs.

use crate::error::{Error, Result};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn mod_mul(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

fn mod_pow(mut base: u64, mut exp: u64, q: u64) -> u64 {
    let mut acc = 1u64;
    base %= q;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, q);
        }
        base = mod_mul(base, base, q);
        exp >>= 1;
    }
    acc
}

fn mod_inv(a: u64, q: u64) -> u64 {
    mod_pow(a, q - 2, q) // q prime
}

/// Polynomial over Z/qZ, coefficients ascending, trailing zeros trimmed.
/// The zero polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModPolynomial {
    pub modulus: u64,
    pub coefficients: Vec<u64>,
}

impl ModPolynomial {
    pub fn new(modulus: u64, mut coefficients: Vec<u64>) -> Self {
        for c in &mut coefficients {
            *c %= modulus;
        }
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        ModPolynomial {
            modulus,
            coefficients,
        }
    }

    pub fn zero(modulus: u64) -> Self {
        ModPolynomial {
            modulus,
            coefficients: vec![],
        }
    }

    pub fn one(modulus: u64) -> Self {
        ModPolynomial::new(modulus, vec![1])
    }

    /// The monomial `x`.
    pub fn x(modulus: u64) -> Self {
        ModPolynomial::new(modulus, vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coefficients.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<u64> {
        self.coefficients.last().copied()
    }

    pub fn add(&self, other: &Self) -> Self {
        let q = self.modulus;
        let n = self.coefficients.len().max(other.coefficients.len());
        let mut out = vec![0u64; n];
        for (i, o) in out.iter_mut().enumerate() {
            let a = self.coefficients.get(i).copied().unwrap_or(0);
            let b = other.coefficients.get(i).copied().unwrap_or(0);
            *o = (a + b) % q;
        }
        ModPolynomial::new(q, out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let q = self.modulus;
        let n = self.coefficients.len().max(other.coefficients.len());
        let mut out = vec![0u64; n];
        for (i, o) in out.iter_mut().enumerate() {
            let a = self.coefficients.get(i).copied().unwrap_or(0);
            let b = other.coefficients.get(i).copied().unwrap_or(0);
            *o = (a + q - b) % q;
        }
        ModPolynomial::new(q, out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let q = self.modulus;
        if self.is_zero() || other.is_zero() {
            return ModPolynomial::zero(q);
        }
        let mut out = vec![0u128; self.coefficients.len() + other.coefficients.len() - 1];
        for (i, &a) in self.coefficients.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coefficients.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u128 * b as u128) % q as u128;
            }
        }
        ModPolynomial::new(q, out.into_iter().map(|c| c as u64).collect())
    }

    pub fn scale(&self, k: u64) -> Self {
        let q = self.modulus;
        ModPolynomial::new(
            q,
            self.coefficients
                .iter()
                .map(|&c| mod_mul(c, k, q))
                .collect(),
        )
    }

    /// Euclidean division; divisor must be nonzero.
    pub fn divmod(&self, divisor: &Self) -> (Self, Self) {
        let q = self.modulus;
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree().unwrap();
        if self.degree().is_none_or(|d| d < dd) {
            return (ModPolynomial::zero(q), self.clone());
        }
        let inv_lead = mod_inv(divisor.leading().unwrap(), q);
        let mut rem = self.coefficients.clone();
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = mod_mul(rem[i], inv_lead, q);
            if c == 0 {
                continue;
            }
            quot[i - dd] = c;
            for (j, &dc) in divisor.coefficients.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = (rem[idx] + q - mod_mul(c, dc, q)) % q;
            }
        }
        (ModPolynomial::new(q, quot), ModPolynomial::new(q, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.divmod(divisor).1
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None | Some(1) => self.clone(),
            Some(l) => self.scale(mod_inv(l, self.modulus)),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let q = self.modulus;
        if self.coefficients.len() <= 1 {
            return ModPolynomial::zero(q);
        }
        ModPolynomial::new(
            q,
            self.coefficients
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mod_mul(c, i as u64 % q, q))
                .collect(),
        )
    }

    /// `self^exp mod modulus_poly` by square-and-multiply.
    pub fn powmod(&self, mut exp: u128, modulus_poly: &Self) -> Self {
        let q = self.modulus;
        let mut base = self.rem(modulus_poly);
        let mut acc = ModPolynomial::one(q);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).rem(modulus_poly);
            }
            base = base.mul(&base).rem(modulus_poly);
            exp >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: u64) -> u64 {
        let q = self.modulus;
        self.coefficients
            .iter()
            .rev()
            .fold(0u64, |acc, &c| (mod_mul(acc, x, q) + c) % q)
    }
}

/// Squarefree test: gcd with the derivative is constant.
pub fn is_squarefree(f: &ModPolynomial) -> bool {
    let g = f.gcd(&f.derivative());
    g.degree() == Some(0)
}

/// Distinct-degree decomposition of a squarefree monic polynomial: pairs
/// `(d, product of all monic irreducible factors of degree d)`.
pub fn distinct_degree_factorization(f: &ModPolynomial) -> Vec<(usize, ModPolynomial)> {
    let q = f.modulus;
    let mut f_star = f.monic();
    let mut out = Vec::new();
    let x = ModPolynomial::x(q);
    let mut h = x.clone();
    let mut d = 0usize;
    while f_star.degree().unwrap_or(0) > 0 {
        d += 1;
        if 2 * d > f_star.degree().unwrap() {
            // Remainder is a single irreducible factor.
            let deg = f_star.degree().unwrap();
            out.push((deg, f_star.monic()));
            break;
        }
        h = h.powmod(q as u128, &f_star);
        let g = h.sub(&x).gcd(&f_star);
        if g.degree().unwrap_or(0) > 0 {
            out.push((d, g.clone()));
            f_star = f_star.divmod(&g).0.monic();
            h = h.rem(&f_star);
        }
    }
    out
}

/// Cantor-Zassenhaus equal-degree splitting of a monic squarefree product of
/// irreducibles all of degree `d`. Randomized steps draw from a seeded
/// generator so results are reproducible.
fn equal_degree_split(
    f: &ModPolynomial,
    d: usize,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<ModPolynomial>,
) {
    let q = f.modulus;
    let deg = f.degree().unwrap_or(0);
    if deg == d {
        out.push(f.monic());
        return;
    }
    loop {
        let coeffs: Vec<u64> = (0..deg).map(|_| rng.gen_range(0..q)).collect();
        let a = ModPolynomial::new(q, coeffs);
        if a.degree().is_none() {
            continue;
        }
        let g = a.gcd(f);
        let candidate = if g.degree().unwrap_or(0) > 0 && g.degree().unwrap() < deg {
            g
        } else {
            let b = if q == 2 {
                // Characteristic 2 uses the trace map instead of the
                // (q^d - 1)/2 power.
                let mut acc = a.clone();
                let mut term = a.clone();
                for _ in 1..d {
                    term = term.mul(&term).rem(f);
                    acc = acc.add(&term);
                }
                acc
            } else {
                let exp: u128 = ((q as u128).pow(d as u32) - 1) / 2;
                a.powmod(exp, f).sub(&ModPolynomial::one(q))
            };
            let g = b.gcd(f);
            if g.degree().unwrap_or(0) == 0 || g.degree().unwrap() == deg {
                continue;
            }
            g
        };
        let other = f.divmod(&candidate).0.monic();
        equal_degree_split(&candidate, d, rng, out);
        equal_degree_split(&other, d, rng, out);
        return;
    }
}

/// Full factorization of a squarefree polynomial into monic irreducibles
/// (plus the leading unit), deterministic across runs.
pub fn factor_squarefree(f: &ModPolynomial) -> Result<Vec<ModPolynomial>> {
    if f.is_zero() || f.degree() == Some(0) {
        return Ok(vec![]);
    }
    if !is_squarefree(f) {
        return Err(Error::NotSquarefree);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    let mut factors = Vec::new();
    for (d, product) in distinct_degree_factorization(&f.monic()) {
        equal_degree_split(&product, d, &mut rng, &mut factors);
    }
    factors.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coefficients.cmp(&b.coefficients))
    });
    Ok(factors)
}

/// Multiset of irreducible factor degrees (ascending). The degrees always
/// sum to the input degree.
pub fn factor_degrees(f: &ModPolynomial) -> Result<Vec<usize>> {
    let factors = factor_squarefree(f)?;
    let mut degrees: Vec<usize> = factors.iter().filter_map(|p| p.degree()).collect();
    degrees.sort_unstable();
    Ok(degrees)
}
