use serde::{Deserialize, Serialize};

use crate::arith::check_prime_base;
use crate::error::{Error, Result};

/// Shape of the tensor-product space: prime base, the two smoothness
/// exponents, and how many coordinates carry each structure (s digital,
/// t periodic).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpaceParams {
    pub base: u32,
    pub alpha: f64,
    pub beta: f64,
    pub s: usize,
    pub t: usize,
}

impl SpaceParams {
    pub fn new(base: u32, alpha: f64, beta: f64, s: usize, t: usize) -> Result<Self> {
        check_prime_base(base)?;
        if !(alpha > 1.0) || !alpha.is_finite() {
            return Err(Error::parameter(format!(
                "alpha = {alpha} must be a finite real > 1"
            )));
        }
        if !(beta > 1.0) || !beta.is_finite() {
            return Err(Error::parameter(format!(
                "beta = {beta} must be a finite real > 1"
            )));
        }
        Ok(SpaceParams { base, alpha, beta, s, t })
    }

    pub fn dim(&self) -> usize {
        self.s + self.t
    }

    pub(crate) fn check_index_dims(&self, k_len: usize, l_len: usize) -> Result<()> {
        if k_len != self.s || l_len != self.t {
            return Err(Error::dimension(format!(
                "index shape ({k_len},{l_len}) does not match space ({},{})",
                self.s, self.t
            )));
        }
        Ok(())
    }

    pub(crate) fn check_point_dims(&self, x_len: usize, y_len: usize) -> Result<()> {
        if x_len != self.s || y_len != self.t {
            return Err(Error::dimension(format!(
                "point shape ({x_len},{y_len}) does not match space ({},{})",
                self.s, self.t
            )));
        }
        Ok(())
    }
}

/// A frequency pair: non-negative digital frequencies for the first block of
/// coordinates and signed integer frequencies for the second.
///
/// The derived ordering (lexicographic, digital part first) is the tie-break
/// order used wherever eigenvalues coincide.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HybridIndex {
    pub k: Vec<u64>,
    pub l: Vec<i64>,
}

impl HybridIndex {
    pub fn new(k: Vec<u64>, l: Vec<i64>) -> Self {
        HybridIndex { k, l }
    }

    pub fn zero(s: usize, t: usize) -> Self {
        HybridIndex {
            k: vec![0; s],
            l: vec![0; t],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.k.iter().all(|&k| k == 0) && self.l.iter().all(|&l| l == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(SpaceParams::new(2, 2.0, 2.0, 1, 1).is_ok());
        assert!(SpaceParams::new(2, 2.0, 2.0, 0, 0).is_ok());
        assert!(SpaceParams::new(4, 2.0, 2.0, 1, 1).is_err());
        assert!(SpaceParams::new(2, 1.0, 2.0, 1, 1).is_err());
        assert!(SpaceParams::new(2, 2.0, 0.5, 1, 1).is_err());
        assert!(SpaceParams::new(2, f64::NAN, 2.0, 1, 1).is_err());
    }

    #[test]
    fn index_ordering_is_lexicographic() {
        let a = HybridIndex::new(vec![0, 1], vec![-2]);
        let b = HybridIndex::new(vec![0, 1], vec![2]);
        let c = HybridIndex::new(vec![1, 0], vec![-5]);
        assert!(a < b);
        assert!(b < c);
        assert!(HybridIndex::zero(2, 1) < a);
    }
}
