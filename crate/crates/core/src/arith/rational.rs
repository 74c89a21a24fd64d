use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational in `[0,1)`, stored in lowest terms.
///
/// All point coordinates in this crate are of this form, so group operations
/// on the unit interval (addition mod 1, digitwise operations) stay exact.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational01 {
    num: u64,
    den: u64,
}

impl Rational01 {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::parameter("denominator must be positive"));
        }
        if num >= den {
            return Err(Error::Domain(format!(
                "{num}/{den} lies outside [0,1)"
            )));
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: u64, den: u64) -> Self {
        let g = num.gcd(&den);
        Rational01 {
            num: num / g,
            den: den / g,
        }
    }

    pub fn zero() -> Self {
        Rational01 { num: 0, den: 1 }
    }

    /// `(num mod den) / den`, for constructions that reduce mod 1 implicitly.
    pub fn from_mod(num: u128, den: u64) -> Self {
        debug_assert!(den > 0);
        let r = (num % u128::from(den)) as u64;
        Self::reduced(r, den)
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    pub fn denom(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Exact addition mod 1.
    pub fn add_mod1(&self, other: &Self) -> Self {
        let d = u128::from(self.den) * u128::from(other.den);
        let n = u128::from(self.num) * u128::from(other.den)
            + u128::from(other.num) * u128::from(self.den);
        Self::reduce_u128(n % d, d)
    }

    /// Exact subtraction mod 1.
    pub fn sub_mod1(&self, other: &Self) -> Self {
        let d = u128::from(self.den) * u128::from(other.den);
        let a = u128::from(self.num) * u128::from(other.den);
        let b = u128::from(other.num) * u128::from(self.den);
        let n = if a >= b { a - b } else { d - (b - a) };
        Self::reduce_u128(n % d, d)
    }

    fn reduce_u128(num: u128, den: u128) -> Self {
        let g = num.gcd(&den);
        let (num, den) = (num / g, den / g);
        assert!(
            den <= u128::from(u64::MAX),
            "rational denominator exceeds 64 bits"
        );
        Rational01 {
            num: num as u64,
            den: den as u64,
        }
    }

    /// The base-b digit expansion ξ_1, ξ_2, … of the value, most significant
    /// first. Terminating expansions continue with zeros, so the iterator is
    /// infinite; rationals with denominator coprime to b yield their periodic
    /// expansion.
    pub fn digits(&self, base: u32) -> Digits {
        Digits {
            base: u64::from(base),
            den: self.den,
            rem: self.num,
        }
    }

    /// 1-based position of the first nonzero digit, or `None` for zero.
    pub fn first_nonzero_digit(&self, base: u32) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        // x >= 1/den forces a nonzero digit at or before position log_b(den)+1.
        for (i, d) in self.digits(base).enumerate() {
            if d != 0 {
                return Some(i as u32 + 1);
            }
        }
        unreachable!("nonzero rational with all-zero expansion")
    }

    /// 1-based position of the first digit where the expansions of `self` and
    /// `other` differ, or `None` when the values are equal.
    pub fn first_digit_difference(&self, other: &Self, base: u32) -> Option<u32> {
        if self == other {
            return None;
        }
        let mut a = self.digits(base);
        let mut b = other.digits(base);
        // Distinct rationals differ within log_b(den_a * den_b) + 1 digits.
        let mut bound = 2u32;
        let mut p = u128::from(base);
        let limit = u128::from(self.den) * u128::from(other.den);
        while p <= limit {
            p *= u128::from(base);
            bound += 1;
        }
        for i in 1..=bound {
            if a.next() != b.next() {
                return Some(i);
            }
        }
        unreachable!("distinct rationals with identical expansion prefix")
    }

    /// First `m` base-b digits, failing unless the value is exactly
    /// representable with them (denominator dividing b^m).
    pub fn to_digits(&self, base: u32, m: u32) -> Result<DigitVector> {
        let mut p: u128 = 1;
        for _ in 0..m {
            p = p.saturating_mul(u128::from(base));
        }
        if p % u128::from(self.den) != 0 {
            return Err(Error::Precision(format!(
                "{self} is not representable with {m} base-{base} digits"
            )));
        }
        let digits = self.digits(base).take(m as usize).collect();
        DigitVector::new(base, digits)
    }

    pub fn from_digits(dv: &DigitVector) -> Self {
        dv.to_rational()
    }
}

impl PartialOrd for Rational01 {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational01 {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let a = u128::from(self.num) * u128::from(other.den);
        let b = u128::from(other.num) * u128::from(self.den);
        a.cmp(&b)
    }
}

impl fmt::Display for Rational01 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Rational01 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl std::str::FromStr for Rational01 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (n, d) = s
            .split_once('/')
            .ok_or_else(|| Error::parameter(format!("expected num/den, got {s:?}")))?;
        let num = n
            .trim()
            .parse::<u64>()
            .map_err(|e| Error::parameter(format!("bad numerator {n:?}: {e}")))?;
        let den = d
            .trim()
            .parse::<u64>()
            .map_err(|e| Error::parameter(format!("bad denominator {d:?}: {e}")))?;
        Rational01::new(num, den)
    }
}

impl Serialize for Rational01 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational01 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Infinite digit stream produced by exact long division.
pub struct Digits {
    base: u64,
    den: u64,
    rem: u64,
}

impl Iterator for Digits {
    type Item = u8;

    fn next(&mut self) -> Option<u8> {
        let r = u128::from(self.rem) * u128::from(self.base);
        let digit = (r / u128::from(self.den)) as u8;
        self.rem = (r % u128::from(self.den)) as u64;
        Some(digit)
    }
}

/// A finite base-b digit expansion ξ_1 … ξ_m, most significant first
/// (ξ_1 is the coefficient of b^{-1}).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitVector {
    base: u32,
    digits: Vec<u8>,
}

impl DigitVector {
    pub fn new(base: u32, digits: Vec<u8>) -> Result<Self> {
        if base < 2 {
            return Err(Error::parameter("digit base must be at least 2"));
        }
        if let Some(d) = digits.iter().find(|&&d| u32::from(d) >= base) {
            return Err(Error::Domain(format!("digit {d} out of range for base {base}")));
        }
        Ok(DigitVector { base, digits })
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn to_rational(&self) -> Rational01 {
        let b = u128::from(self.base);
        let mut num: u128 = 0;
        let mut den: u128 = 1;
        for &d in &self.digits {
            num = num * b + u128::from(d);
            den *= b;
        }
        Rational01::reduce_u128(num, den)
    }
}
