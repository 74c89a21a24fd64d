//! Polynomials over the prime field F_b and the Laurent-series truncation map
//! that turns fractions of them into points of the unit interval.

use std::fmt;
use std::str::FromStr;

use crate::arith::{check_prime_base, DigitVector, Rational01};
use crate::error::{Error, Result};

/// A polynomial over F_b, coefficients lowest degree first with no trailing
/// zeros. The zero polynomial has an empty coefficient vector and degree -∞
/// (represented as `None`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FbPoly {
    base: u32,
    coeffs: Vec<u8>,
}

impl FbPoly {
    pub fn new(base: u32, mut coeffs: Vec<u8>) -> Result<Self> {
        check_prime_base(base)?;
        for c in &mut coeffs {
            *c %= base as u8;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Ok(FbPoly { base, coeffs })
    }

    pub fn zero(base: u32) -> Result<Self> {
        Self::new(base, vec![])
    }

    pub fn one(base: u32) -> Result<Self> {
        Self::new(base, vec![1])
    }

    /// x^d
    pub fn monomial(base: u32, d: usize) -> Result<Self> {
        let mut coeffs = vec![0u8; d + 1];
        coeffs[d] = 1;
        Self::new(base, coeffs)
    }

    /// The polynomial v_0 + v_1 x + … with (v_0, v_1, …) the base-b digits of
    /// the integer; this is the indexing bijection used for point sets.
    pub fn from_index(base: u32, mut v: u64) -> Result<Self> {
        check_prime_base(base)?;
        let b = u64::from(base);
        let mut coeffs = Vec::new();
        while v > 0 {
            coeffs.push((v % b) as u8);
            v /= b;
        }
        Ok(FbPoly { base, coeffs })
    }

    pub fn to_index(&self) -> u64 {
        let b = u64::from(self.base);
        let mut v = 0u64;
        for &c in self.coeffs.iter().rev() {
            v = v * b + u64::from(c);
        }
        v
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> u8 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    fn check_same_base(&self, other: &Self) -> Result<()> {
        if self.base != other.base {
            return Err(Error::parameter(format!(
                "mixed polynomial bases {} and {}",
                self.base, other.base
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_base(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let b = self.base as u16;
        let coeffs = (0..n)
            .map(|i| ((u16::from(self.coeff(i)) + u16::from(other.coeff(i))) % b) as u8)
            .collect();
        Self::new(self.base, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_base(other)?;
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.base);
        }
        let b = u32::from(self.base as u16);
        let mut coeffs = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &c) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = (coeffs[i + j] + u32::from(a) * u32::from(c)) % b;
            }
        }
        Self::new(self.base, coeffs.into_iter().map(|c| c as u8).collect())
    }

    /// Remainder of self modulo f.
    pub fn rem(&self, f: &Self) -> Result<Self> {
        self.check_same_base(f)?;
        let fdeg = f
            .deg()
            .ok_or_else(|| Error::parameter("division by the zero polynomial"))?;
        let b = self.base as i32;
        let lead_inv = mod_inverse(i32::from(f.coeffs[fdeg]), b);
        let mut r: Vec<i32> = self.coeffs.iter().map(|&c| i32::from(c)).collect();
        while r.len() > fdeg {
            let top = r.len() - 1;
            let factor = (r[top] * lead_inv) % b;
            if factor != 0 {
                let shift = top - fdeg;
                for (i, &fc) in f.coeffs.iter().enumerate() {
                    r[shift + i] = (r[shift + i] - factor * i32::from(fc)).rem_euclid(b);
                }
            }
            r.pop();
        }
        Self::new(self.base, r.into_iter().map(|c| c as u8).collect())
    }

    /// True if the polynomial has no divisor of degree in [1, deg/2],
    /// by exhaustive trial division. Intended for small moduli only.
    pub fn is_irreducible(&self) -> bool {
        let deg = match self.deg() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(d) => d,
        };
        let b = u64::from(self.base);
        for d in 1..=deg / 2 {
            let lo = b.pow(d as u32);
            let hi = b.pow(d as u32 + 1);
            for v in lo..hi {
                let cand = FbPoly::from_index(self.base, v).expect("prime base");
                if self.rem(&cand).expect("same base").is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// The irreducible degree-m polynomial with the smallest integer encoding.
    pub fn smallest_irreducible(base: u32, m: u32) -> Result<Self> {
        check_prime_base(base)?;
        if m == 0 {
            return Err(Error::parameter("modulus degree must be positive"));
        }
        let b = u64::from(base);
        let lo = b.pow(m);
        let hi = lo
            .checked_mul(b)
            .ok_or_else(|| Error::parameter("modulus degree too large"))?;
        for v in lo..hi {
            let cand = FbPoly::from_index(base, v)?;
            if cand.is_irreducible() {
                return Ok(cand);
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }
}

fn mod_inverse(a: i32, b: i32) -> i32 {
    // b prime and a != 0 mod b
    let mut result = 1i32;
    let mut pow = a.rem_euclid(b);
    let mut e = b - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = (result * pow) % b;
        }
        pow = (pow * pow) % b;
        e >>= 1;
    }
    result
}

impl fmt::Display for FbPoly {
    /// Coefficient string, lowest degree first: `1,1,0,1` is 1 + x + x^3.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for FbPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FbPoly(b={}, {})", self.base, self)
    }
}

/// Parses the coefficient string form; the base must be attached afterwards
/// via [`FbPoly::with_base_checked`] when it is not implied by context.
pub struct PolyCoeffs(pub Vec<u8>);

impl FromStr for PolyCoeffs {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u8>()
                    .map_err(|e| Error::parameter(format!("bad coefficient {p:?}: {e}")))
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(PolyCoeffs(coeffs))
    }
}

impl FbPoly {
    pub fn parse(base: u32, s: &str) -> Result<Self> {
        let coeffs: PolyCoeffs = s.parse()?;
        for &c in &coeffs.0 {
            if u32::from(c) >= base {
                return Err(Error::parameter(format!(
                    "coefficient {c} out of range for base {base}"
                )));
            }
        }
        FbPoly::new(base, coeffs.0)
    }
}

/// (a·c) mod f with coefficient arithmetic in F_b.
pub fn poly_mul_mod(a: &FbPoly, c: &FbPoly, f: &FbPoly) -> Result<FbPoly> {
    a.mul(c)?.rem(f)
}

/// The truncation map for fractions of polynomials: expands v·g/f as a
/// Laurent series in 1/x and keeps the first m fractional coefficients,
/// returning Σ_{l=1}^{m} t_l b^{-l} as an exact rational.
pub fn nu_m(v: &FbPoly, g: &FbPoly, f: &FbPoly, m: u32) -> Result<Rational01> {
    v.check_same_base(g)?;
    v.check_same_base(f)?;
    if f.deg() != Some(m as usize) {
        return Err(Error::parameter(format!(
            "modulus degree {:?} does not match m = {m}",
            f.deg()
        )));
    }
    if let Some(d) = v.deg() {
        if d >= m as usize {
            return Err(Error::parameter(format!(
                "index polynomial degree {d} must be below m = {m}"
            )));
        }
    }
    // The polynomial part of v·g/f only feeds non-positive exponents, which
    // the map discards, so reduce mod f first.
    let mut r = poly_mul_mod(v, g, f)?;
    let b = v.base();
    let x = FbPoly::monomial(b, 1)?;
    let m_us = m as usize;
    let lead_inv = mod_inverse(i32::from(f.coeff(m_us)), b as i32) as u16;
    let mut digits = Vec::with_capacity(m_us);
    for _ in 0..m {
        // r/f = t_1/x + …, with t_1 the coefficient of x^{m-1} in r divided
        // by the leading coefficient of f
        let t = ((u16::from(r.coeff(m_us - 1)) * lead_inv) % b as u16) as u8;
        digits.push(t);
        // next state: r·x - t·f, again of degree < m
        let mut shifted = r.mul(&x)?;
        if t != 0 {
            let mut tf = f.clone();
            let neg_t = ((b as u16 - u16::from(t)) % b as u16) as u8;
            tf = tf.mul(&FbPoly::new(b, vec![neg_t])?)?;
            shifted = shifted.add(&tf)?;
        }
        r = shifted;
        debug_assert!(r.deg().map_or(true, |d| d < m_us));
    }
    Ok(DigitVector::new(b, digits)?.to_rational())
}
