use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use super::kernel::weight_product;
use super::params::{HybridIndex, SpaceParams};
use super::weights::WeightSpec;
use crate::arith::{frac_dot, index_digit_sub, walsh_phase_multi, cis_frac, Complex, Rational01};
use crate::error::{Error, Result};

/// An element of the space with finitely many nonzero coefficients.
///
/// Immutable after construction; evaluation and norms are pure reads.
#[derive(Clone, Debug)]
pub struct CoeffFunction {
    space: SpaceParams,
    weights: WeightSpec,
    terms: BTreeMap<HybridIndex, Complex>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    k: Vec<u64>,
    l: Vec<i64>,
    re: f64,
    im: f64,
}

#[derive(Serialize, Deserialize)]
struct CoeffFunctionJson {
    space: SpaceParams,
    weights: WeightSpec,
    terms: Vec<TermJson>,
}

impl CoeffFunction {
    pub fn new(
        space: SpaceParams,
        weights: WeightSpec,
        terms: impl IntoIterator<Item = (HybridIndex, Complex)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (idx, c) in terms {
            space.check_index_dims(idx.k.len(), idx.l.len())?;
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(Error::Domain(format!("non-finite coefficient at {idx:?}")));
            }
            if c.norm_sqr() > 0.0 {
                map.insert(idx, c);
            }
        }
        Ok(CoeffFunction {
            space,
            weights,
            terms: map,
        })
    }

    /// The constant function 1.
    pub fn constant_one(space: SpaceParams, weights: WeightSpec) -> Result<Self> {
        let zero = HybridIndex::zero(space.s, space.t);
        Self::new(space, weights, [(zero, Complex::new(1.0, 0.0))])
    }

    pub fn space(&self) -> &SpaceParams {
        &self.space
    }

    pub fn weights(&self) -> &WeightSpec {
        &self.weights
    }

    pub fn terms(&self) -> impl Iterator<Item = (&HybridIndex, &Complex)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, idx: &HybridIndex) -> Complex {
        self.terms
            .get(idx)
            .copied()
            .unwrap_or_else(|| Complex::new(0.0, 0.0))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Squared norm: Σ |coefficient|² / eigenvalue.
    pub fn norm_sq(&self) -> Result<f64> {
        let mut acc = 0.0f64;
        for (idx, c) in &self.terms {
            acc += c.norm_sqr() / weight_product(&self.space, &self.weights, idx)?;
        }
        Ok(acc)
    }

    /// Pointwise evaluation Σ coeff · wal_k(x) · trig_l(y).
    pub fn eval(&self, x: &[Rational01], y: &[Rational01]) -> Result<Complex> {
        self.space.check_point_dims(x.len(), y.len())?;
        let b = self.space.base;
        let mut acc = Complex::new(0.0, 0.0);
        for (idx, c) in &self.terms {
            let wal_num = walsh_phase_multi(b, &idx.k, x)?;
            let wal_phase = Rational01::new(wal_num, u64::from(b)).expect("phase < b");
            let phase = wal_phase.add_mod1(&frac_dot(&idx.l, y)?);
            acc += c * cis_frac(&phase);
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> String {
        let doc = CoeffFunctionJson {
            space: self.space,
            weights: self.weights.clone(),
            terms: self
                .terms
                .iter()
                .map(|(idx, c)| TermJson {
                    k: idx.k.clone(),
                    l: idx.l.clone(),
                    re: c.re,
                    im: c.im,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: CoeffFunctionJson =
            serde_json::from_str(s).map_err(|e| Error::parameter(format!("bad JSON: {e}")))?;
        Self::new(
            doc.space,
            doc.weights,
            doc.terms
                .into_iter()
                .map(|t| (HybridIndex::new(t.k, t.l), Complex::new(t.re, t.im))),
        )
    }
}

/// The coefficient index shift induced by multiplying with the conjugated
/// basis function of (k, l): the coefficient at (h, m) of the product is the
/// original coefficient at (k ⊕ h, l + m). Test support for norm-shift
/// arguments; nothing in the production paths builds these.
#[cfg(test)]
pub(crate) fn modulate(f: &CoeffFunction, k: &[u64], l: &[i64]) -> Result<CoeffFunction> {
    let space = *f.space();
    space.check_index_dims(k.len(), l.len())?;
    let b = space.base;
    let mut terms = Vec::new();
    for (idx, c) in f.terms() {
        let h: Vec<u64> = idx
            .k
            .iter()
            .zip(k)
            .map(|(&kp, &kj)| index_digit_sub(b, kp, kj))
            .collect();
        let m: Vec<i64> = idx.l.iter().zip(l).map(|(&lp, &lj)| lp - lj).collect();
        terms.push((HybridIndex::new(h, m), *c));
    }
    CoeffFunction::new(space, f.weights().clone(), terms)
}

/// Draws a unit-norm element supported on the spectral truncation set A_M:
/// `count` indices chosen uniformly without replacement, positive real
/// coefficients, rescaled so the squared norm is exactly 1. Deterministic in
/// the seed.
pub fn random_test_function(
    space: &SpaceParams,
    weights: &WeightSpec,
    support_bound: f64,
    count: usize,
    seed: u64,
) -> Result<CoeffFunction> {
    if count == 0 {
        return Err(Error::parameter("coefficient count must be at least 1"));
    }
    let entries = crate::spectrum::enumerate_a_m(space, weights, support_bound)?;
    if count > entries.len() {
        return Err(Error::parameter(format!(
            "requested {count} support points but the truncation set has only {}",
            entries.len()
        )));
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let chosen: Vec<_> = entries
        .choose_multiple(&mut rng, count)
        .cloned()
        .collect();
    let mut terms: Vec<(HybridIndex, Complex)> = chosen
        .into_iter()
        .map(|e| {
            let mag: f64 = rng.gen_range(0.1..=1.0);
            (e.index, Complex::new(mag, 0.0))
        })
        .collect();
    let mut norm_sq = 0.0f64;
    for (idx, c) in &terms {
        norm_sq += c.norm_sqr() / weight_product(space, weights, idx)?;
    }
    let scale = norm_sq.sqrt().recip();
    for (_, c) in &mut terms {
        *c *= scale;
    }
    CoeffFunction::new(*space, weights.clone(), terms)
}
