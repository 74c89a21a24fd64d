//! The truncated-spectrum QMC approximation: coefficient estimates by
//! character-weighted node averages over a hybrid point set, the exact
//! truncation/estimation split of its L2 error, and the closed-form error
//! bound with its truncation-parameter choice.

use serde::Serialize;

use crate::arith::{
    frac_dot, mu, prime_power_phase_sum, walsh_phase_multi, zeta, Complex, Rational01,
};
use crate::error::{Error, Result};
use crate::pointsets::HybridPointSet;
use crate::space::{CoeffFunction, HybridIndex, SpaceParams, WeightSpec};
use crate::spectrum::{enumerate_truncation_set, in_a_m};

/// Identifying data of the node set an approximation was computed on.
#[derive(Clone, Debug, Serialize)]
pub struct PointSetSummary {
    pub base: u32,
    pub m: u32,
    pub n: u64,
    pub modulus: Option<String>,
    pub gen_poly: Vec<String>,
    pub gen_int: Vec<u64>,
}

impl From<&HybridPointSet> for PointSetSummary {
    fn from(ps: &HybridPointSet) -> Self {
        PointSetSummary {
            base: ps.base(),
            m: ps.precision(),
            n: ps.len(),
            modulus: ps.modulus().map(|f| f.to_string()),
            gen_poly: ps.gen_poly().iter().map(|g| g.to_string()).collect(),
            gen_int: ps.gen_int().to_vec(),
        }
    }
}

/// Result of one approximation run: the truncation set in spectral order and
/// one estimated coefficient per index.
#[derive(Clone, Debug)]
pub struct ApproxResult {
    space: SpaceParams,
    weights: WeightSpec,
    support: Vec<HybridIndex>,
    coeff_estimates: Vec<Complex>,
    truncation: f64,
    nodes: u64,
    pointset: PointSetSummary,
}

impl ApproxResult {
    pub fn space(&self) -> &SpaceParams {
        &self.space
    }

    pub fn weights(&self) -> &WeightSpec {
        &self.weights
    }

    pub fn support(&self) -> &[HybridIndex] {
        &self.support
    }

    pub fn coeff_estimates(&self) -> &[Complex] {
        &self.coeff_estimates
    }

    /// The truncation parameter M the support was built from.
    pub fn truncation(&self) -> f64 {
        self.truncation
    }

    pub fn node_count(&self) -> u64 {
        self.nodes
    }

    pub fn pointset(&self) -> &PointSetSummary {
        &self.pointset
    }

    pub fn estimate(&self, idx: &HybridIndex) -> Option<Complex> {
        self.support
            .iter()
            .position(|i| i == idx)
            .map(|p| self.coeff_estimates[p])
    }

    /// The approximant as an element of the space (evaluable anywhere).
    pub fn to_coeff_function(&self) -> Result<CoeffFunction> {
        CoeffFunction::new(
            self.space,
            self.weights.clone(),
            self.support
                .iter()
                .cloned()
                .zip(self.coeff_estimates.iter().copied()),
        )
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct TermJson {
            k: Vec<u64>,
            l: Vec<i64>,
            re: f64,
            im: f64,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            space: &'a SpaceParams,
            weights: &'a WeightSpec,
            n: u64,
            m_truncation: f64,
            pointset: &'a PointSetSummary,
            terms: Vec<TermJson>,
        }
        let doc = Doc {
            space: &self.space,
            weights: &self.weights,
            n: self.nodes,
            m_truncation: self.truncation,
            pointset: &self.pointset,
            terms: self
                .support
                .iter()
                .zip(&self.coeff_estimates)
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
}

/// Node values of a black-box function, cached so the function is evaluated
/// exactly once per node; reusable across truncation parameters.
pub struct SampledFunction {
    values: Vec<Complex>,
}

impl SampledFunction {
    pub fn sample<F>(ps: &HybridPointSet, mut f_eval: F) -> Result<Self>
    where
        F: FnMut(&[Rational01], &[Rational01]) -> Result<Complex>,
    {
        let values = (0..ps.len())
            .map(|v| f_eval(ps.walsh_point(v), ps.trig_point(v)))
            .collect::<Result<Vec<Complex>>>()?;
        Ok(SampledFunction { values })
    }

    pub fn values(&self) -> &[Complex] {
        &self.values
    }
}

/// Runs the approximation algorithm: for every index of the truncation set,
/// the coefficient estimate is the node average of f against the conjugated
/// basis character.
///
/// The black box is evaluated exactly N times; use [`SampledFunction`] with
/// [`approximate_sampled`] to reuse values across several truncations.
pub fn approximate<F>(
    mut f_eval: F,
    ps: &HybridPointSet,
    space: &SpaceParams,
    weights: &WeightSpec,
    m: f64,
) -> Result<ApproxResult>
where
    F: FnMut(&[Rational01], &[Rational01]) -> Result<Complex>,
{
    check_pointset(ps, space)?;
    let samples = SampledFunction::sample(ps, &mut f_eval)?;
    approximate_sampled(&samples, ps, space, weights, m)
}

/// Approximation over pre-sampled node values.
pub fn approximate_sampled(
    samples: &SampledFunction,
    ps: &HybridPointSet,
    space: &SpaceParams,
    weights: &WeightSpec,
    m: f64,
) -> Result<ApproxResult> {
    check_pointset(ps, space)?;
    if samples.values.len() != ps.len() as usize {
        return Err(Error::dimension(format!(
            "{} samples for {} nodes",
            samples.values.len(),
            ps.len()
        )));
    }
    let entries = enumerate_truncation_set(space, weights, m)?;
    let n = ps.len();
    let base = ps.base();
    // all node phases are rationals over D = max(b, N), a power of b
    let d = if ps.precision() == 0 { u64::from(base) } else { n };
    let mut support = Vec::with_capacity(entries.len());
    let mut estimates = Vec::with_capacity(entries.len());
    let mut buckets = vec![Complex::new(0.0, 0.0); d as usize];
    for entry in entries {
        buckets.fill(Complex::new(0.0, 0.0));
        for v in 0..n {
            let wal_num = walsh_phase_multi(base, &entry.index.k, ps.walsh_point(v))?;
            let wal_phase =
                Rational01::new(wal_num, u64::from(base)).expect("phase numerator < base");
            let phase = wal_phase.add_mod1(&frac_dot(&entry.index.l, ps.trig_point(v))?);
            debug_assert_eq!(d % phase.denom(), 0);
            let num = phase.numer() * (d / phase.denom());
            // conjugated character: negate the phase
            let slot = if num == 0 { 0 } else { d - num };
            buckets[slot as usize] += samples.values[v as usize];
        }
        let sum = prime_power_phase_sum(base, &buckets);
        support.push(entry.index);
        estimates.push(sum / n as f64);
    }
    Ok(ApproxResult {
        space: *space,
        weights: weights.clone(),
        support,
        coeff_estimates: estimates,
        truncation: m,
        nodes: n,
        pointset: PointSetSummary::from(ps),
    })
}

fn check_pointset(ps: &HybridPointSet, space: &SpaceParams) -> Result<()> {
    if ps.base() != space.base {
        return Err(Error::parameter(format!(
            "point-set base {} does not match space base {}",
            ps.base(),
            space.base
        )));
    }
    if ps.dim_walsh() != space.s || ps.dim_trig() != space.t {
        return Err(Error::dimension(format!(
            "point set is ({},{})-dimensional, space is ({},{})",
            ps.dim_walsh(),
            ps.dim_trig(),
            space.s,
            space.t
        )));
    }
    Ok(())
}

/// The two Parseval components of the squared L2 error: spectrum truncated
/// away (`s1`) and coefficient-estimation error on the kept spectrum (`s2`).
#[derive(Clone, Copy, Debug)]
pub struct ErrorDecomposition {
    pub s1: f64,
    pub s2: f64,
}

impl ErrorDecomposition {
    pub fn total(&self) -> f64 {
        (self.s1 + self.s2).sqrt()
    }
}

/// Exact L2 error of an approximation of a finitely supported function, by
/// expanding both in the orthonormal character basis.
pub fn l2_error_exact(f_true: &CoeffFunction, res: &ApproxResult) -> Result<ErrorDecomposition> {
    if f_true.space() != &res.space {
        return Err(Error::parameter(
            "approximation and reference function live in different spaces",
        ));
    }
    if f_true.weights() != &res.weights {
        return Err(Error::parameter(
            "approximation and reference function use different weights",
        ));
    }
    let mut s1 = 0.0f64;
    for (idx, c) in f_true.terms() {
        if !in_a_m(&res.space, &res.weights, idx, res.truncation)? {
            s1 += c.norm_sqr();
        }
    }
    let mut s2 = 0.0f64;
    for (idx, est) in res.support.iter().zip(&res.coeff_estimates) {
        s2 += (f_true.coefficient(idx) - est).norm_sqr();
    }
    Ok(ErrorDecomposition { s1, s2 })
}

/// Whether the truncation part of the error respects its a-priori bound
/// S1 < ‖f‖²/M. Holds for every valid input; vacuously true for the zero
/// function.
pub fn s1_bound_check(f_true: &CoeffFunction, res: &ApproxResult) -> Result<bool> {
    if f_true.num_terms() == 0 {
        return Ok(true);
    }
    let s1 = l2_error_exact(f_true, res)?.s1;
    Ok(s1 < f_true.norm_sq()? / res.truncation)
}

/// The constant of the closed-form error bound: a product of the integration
/// bound factors, the norm-shift factors, and the cardinality-bound factors
/// at order κ. Requires κ > 1/min(α, β).
pub fn c_constant(space: &SpaceParams, weights: &WeightSpec, kappa: f64) -> Result<f64> {
    let theta = space.alpha.min(space.beta);
    if kappa * theta <= 1.0 {
        return Err(Error::Divergence(format!(
            "kappa = {kappa} must exceed 1/min(alpha,beta) = {}",
            1.0 / theta
        )));
    }
    let mu_a = mu(space.base, space.alpha)?;
    let zeta_b = zeta(space.beta)?;
    let zeta_tk = zeta(theta * kappa)?;
    let b_alpha = f64::from(space.base).powf(space.alpha);
    let two_beta = 2.0f64.powf(space.beta);
    let mut c = 2.0f64;
    for j in 1..=space.s {
        c *= 1.0 + 2.0 * weights.gamma1(j)? * mu_a;
    }
    for j in 1..=space.t {
        c *= 1.0 + 4.0 * weights.gamma2(j)? * zeta_b;
    }
    for j in 1..=space.t {
        c *= 1.0f64.max(two_beta * weights.gamma2(j)?);
    }
    for j in 1..=space.s {
        c *= 1.0 + 2.0 * zeta_tk * (b_alpha * weights.gamma1(j)?).powf(kappa);
    }
    for j in 1..=space.t {
        c *= 1.0 + 2.0 * zeta_tk * weights.gamma2(j)?.powf(kappa);
    }
    Ok(c)
}

/// The truncation choice M(N) = (N/c)^{1/(2+κ)} and the worst-case error
/// bound sqrt(2) (c/N)^{1/(4+2κ)} of the algorithm run with it.
pub fn prop_error_bound(
    space: &SpaceParams,
    weights: &WeightSpec,
    n: u64,
    kappa: f64,
) -> Result<(f64, f64)> {
    if !is_power_of(u64::from(space.base), n) {
        return Err(Error::parameter(format!(
            "node count {n} is not a power of the base {}",
            space.base
        )));
    }
    let c = c_constant(space, weights, kappa)?;
    let ratio = n as f64 / c;
    let m_choice = ratio.powf(1.0 / (2.0 + kappa));
    let bound = 2.0f64.sqrt() * ratio.powf(-1.0 / (4.0 + 2.0 * kappa));
    Ok((m_choice, bound))
}

fn is_power_of(base: u64, mut n: u64) -> bool {
    if n == 0 {
        return false;
    }
    while n % base == 0 {
        n /= base;
    }
    n == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fbpoly::FbPoly;
    use crate::pointsets::{cbc_construct, qmc_int_error};
    use crate::space::{modulate, random_test_function, WeightFamily};

    fn unit_weights() -> WeightSpec {
        WeightSpec::uniform(WeightFamily::Constant(1.0)).unwrap()
    }

    fn eval_of(f: &CoeffFunction) -> impl FnMut(&[Rational01], &[Rational01]) -> Result<Complex> + '_ {
        move |x, y| f.eval(x, y)
    }

    fn pl_pointset_m2() -> HybridPointSet {
        // digital part from f = x^2, g = 1; no lattice part
        let f = FbPoly::monomial(2, 2).unwrap();
        HybridPointSet::from_generators(2, 2, f, vec![FbPoly::one(2).unwrap()], vec![]).unwrap()
    }

    #[test]
    fn constant_function_estimates_are_exact() {
        let space = SpaceParams::new(2, 2.0, 2.0, 1, 1).unwrap();
        let w = unit_weights();
        let res = cbc_construct(&space, &w, 2, None).unwrap();
        let one = CoeffFunction::constant_one(space, w.clone()).unwrap();
        let out = approximate(eval_of(&one), &res.point_set, &space, &w, 20.0).unwrap();

        let zero_idx = HybridIndex::zero(1, 1);
        let est0 = out.estimate(&zero_idx).unwrap();
        assert_eq!(est0, Complex::new(1.0, 0.0));

        // independent exact-vanishing oracle: integer phase counts reduced by
        // the cyclotomic relation
        let ps = &res.point_set;
        let n = ps.len();
        for (idx, est) in out.support().iter().zip(out.coeff_estimates()) {
            assert!(est.norm() <= 1.0 + 1e-12);
            if idx == &zero_idx {
                continue;
            }
            let d = n;
            let mut counts = vec![0i64; d as usize];
            for v in 0..n {
                let wal_num = walsh_phase_multi(2, &idx.k, ps.walsh_point(v)).unwrap();
                let wal_phase = Rational01::new(wal_num, 2).unwrap();
                let phase = wal_phase.add_mod1(&frac_dot(&idx.l, ps.trig_point(v)).unwrap());
                let num = phase.numer() * (d / phase.denom());
                let slot = if num == 0 { 0 } else { d - num };
                counts[slot as usize] += 1;
            }
            let blk = (d / 2) as usize;
            let vanishes = (0..blk).all(|r| counts[r] == counts[blk + r]);
            if vanishes {
                assert_eq!(
                    *est,
                    Complex::new(0.0, 0.0),
                    "index {idx:?} should vanish exactly"
                );
            } else {
                assert!(est.norm() > 0.0);
            }
        }
    }

    #[test]
    fn resolved_frequency_is_recovered_exactly() {
        let space = SpaceParams::new(2, 2.0, 2.0, 1, 0).unwrap();
        let w = unit_weights();
        let ps = pl_pointset_m2();
        let f = CoeffFunction::new(
            space,
            w.clone(),
            [(HybridIndex::new(vec![2], vec![]), Complex::new(1.0, 0.0))],
        )
        .unwrap();
        // A_M with M = 16 covers k < 8
        let out = approximate(eval_of(&f), &ps, &space, &w, 16.0).unwrap();
        let est = out.estimate(&HybridIndex::new(vec![2], vec![])).unwrap();
        assert_eq!(est, Complex::new(1.0, 0.0));
        let err = l2_error_exact(&f, &out).unwrap();
        assert_eq!(err.s1, 0.0);
        if err.s2 == 0.0 {
            assert_eq!(err.total(), 0.0);
        }
    }

    #[test]
    fn truncation_below_one_gives_the_zero_algorithm() {
        let space = SpaceParams::new(2, 2.0, 2.0, 1, 1).unwrap();
        let w = unit_weights();
        let res = cbc_construct(&space, &w, 2, None).unwrap();
        let one = CoeffFunction::constant_one(space, w.clone()).unwrap();
        let out = approximate(eval_of(&one), &res.point_set, &space, &w, 0.5).unwrap();
        assert!(out.support().is_empty());
        let err = l2_error_exact(&one, &out).unwrap();
        assert_eq!(err.s1, 1.0);
        assert_eq!(err.s2, 0.0);
    }

    #[test]
    fn error_decomposition_matches_parseval_oracle() {
        let space = SpaceParams::new(2, 2.0, 2.0, 1, 1).unwrap();
        let w = unit_weights();
        let res = cbc_construct(&space, &w, 3, None).unwrap();
        let f = random_test_function(&space, &w, 200.0, 15, 9).unwrap();
        let m = 10.0;
        let out = approximate(eval_of(&f), &res.point_set, &space, &w, m).unwrap();
        let err = l2_error_exact(&f, &out).unwrap();

        // oracle: expand |f - A f|^2 over the union of supports
        let approx_fn = out.to_coeff_function().unwrap();
        let mut union: std::collections::BTreeSet<HybridIndex> =
            f.terms().map(|(i, _)| i.clone()).collect();
        union.extend(approx_fn.terms().map(|(i, _)| i.clone()));
        let mut total_sq = 0.0;
        for idx in &union {
            total_sq += (f.coefficient(idx) - approx_fn.coefficient(idx)).norm_sqr();
        }
        assert!(
            (err.total() - total_sq.sqrt()).abs() < 1e-6,
            "decomposition {} vs oracle {}",
            err.total(),
            total_sq.sqrt()
        );
        // and the split itself is an exact sum
        assert_eq!(err.total(), (err.s1 + err.s2).sqrt());
    }

    #[test]
    fn approximation_is_linear() {
        let space = SpaceParams::new(2, 2.0, 2.0, 1, 1).unwrap();
        let w = unit_weights();
        let res = cbc_construct(&space, &w, 2, None).unwrap();
        let f = random_test_function(&space, &w, 60.0, 8, 3).unwrap();
        let g = random_test_function(&space, &w, 60.0, 8, 4).unwrap();
        let (a, b) = (Complex::new(0.7, -0.2), Complex::new(-1.3, 0.4));
        let m = 12.0;
        let out_f = approximate(eval_of(&f), &res.point_set, &space, &w, m).unwrap();
        let out_g = approximate(eval_of(&g), &res.point_set, &space, &w, m).unwrap();
        let combo = move |x: &[Rational01], y: &[Rational01]| -> Result<Complex> {
            Ok(a * f.eval(x, y)? + b * g.eval(x, y)?)
        };
        let out_c = approximate(combo, &res.point_set, &space, &w, m).unwrap();
        for (i, idx) in out_c.support().iter().enumerate() {
            let lhs = out_c.coeff_estimates()[i];
            let rhs = a * out_f.estimate(idx).unwrap() + b * out_g.estimate(idx).unwrap();
            assert!((lhs - rhs).norm() < 1e-12);
        }
    }

    #[test]
    fn s1_bound_holds_on_random_sparse_functions() {
        let space = SpaceParams::new(2, 2.0, 2.0, 1, 1).unwrap();
        let w = WeightSpec::uniform(WeightFamily::Polynomial { a: 2.0 }).unwrap();
        let res = cbc_construct(&space, &w, 2, None).unwrap();
        for seed in 0..100 {
            let f = random_test_function(&space, &w, 500.0, 12, seed).unwrap();
            let out = approximate(eval_of(&f), &res.point_set, &space, &w, 8.0).unwrap();
            assert!(s1_bound_check(&f, &out).unwrap(), "seed {seed}");
        }
    }

    #[test]
    fn s2_respects_integration_error_times_shifted_norms() {
        // S2 ≤ e_int² Σ_{(k,l) ∈ A_M} ‖f·conj(basis_(k,l))‖²
        let space = SpaceParams::new(2, 2.0, 2.0, 1, 1).unwrap();
        let w = unit_weights();
        let res = cbc_construct(&space, &w, 3, None).unwrap();
        let e_int = qmc_int_error(&res.point_set, &space, &w).unwrap();
        let m = 6.0;
        for seed in [1u64, 5, 11] {
            let f = random_test_function(&space, &w, 40.0, 6, seed).unwrap();
            let out = approximate(eval_of(&f), &res.point_set, &space, &w, m).unwrap();
            let err = l2_error_exact(&f, &out).unwrap();
            let mut norm_sum = 0.0;
            for idx in out.support() {
                let shifted = modulate(&f, &idx.k, &idx.l).unwrap();
                norm_sum += shifted.norm_sq().unwrap();
            }
            assert!(
                err.s2 <= e_int * e_int * norm_sum + 1e-10,
                "seed {seed}: S2 = {} bound = {}",
                err.s2,
                e_int * e_int * norm_sum
            );
        }
    }

    #[test]
    fn modulated_norm_shift_bound() {
        // ‖f_(k,l)‖² ≤ M ‖f‖² Π max(1, 2^β γ_j) for (k,l) in A_M
        let space = SpaceParams::new(2, 2.0, 2.0, 1, 1).unwrap();
        let w = unit_weights();
        let m = 25.0;
        let entries = crate::spectrum::enumerate_a_m(&space, &w, m).unwrap();
        let factor: f64 = (1..=space.t)
            .map(|j| 1.0f64.max(2.0f64.powf(space.beta) * w.gamma2(j).unwrap()))
            .product();
        for seed in [2u64, 7] {
            let f = random_test_function(&space, &w, 100.0, 10, seed).unwrap();
            let base_norm = f.norm_sq().unwrap();
            for e in &entries {
                let shifted = modulate(&f, &e.index.k, &e.index.l).unwrap();
                assert!(
                    shifted.norm_sq().unwrap() <= m * base_norm * factor * (1.0 + 1e-9),
                    "index {:?}",
                    e.index
                );
            }
        }
    }

    #[test]
    fn c_constant_values() {
        let empty = SpaceParams::new(2, 2.0, 2.0, 0, 0).unwrap();
        let w = unit_weights();
        assert_eq!(c_constant(&empty, &w, 1.0).unwrap(), 2.0);

        // factors: 2 · 5 · (1+4ζ(2)) · 4 · (1+8ζ(2)) · (1+2ζ(2))
        let s11 = SpaceParams::new(2, 2.0, 2.0, 1, 1).unwrap();
        let z2 = zeta(2.0).unwrap();
        let expect = 2.0
            * 5.0
            * (1.0 + 4.0 * z2)
            * 4.0
            * (1.0 + 8.0 * z2)
            * (1.0 + 2.0 * z2);
        let c = c_constant(&s11, &w, 1.0).unwrap();
        assert!((c - expect).abs() < 1e-9 * expect);
        assert!((c - 1.84e4).abs() < 0.01e4);

        let s10 = SpaceParams::new(2, 2.0, 2.0, 1, 0).unwrap();
        let c = c_constant(&s10, &w, 1.0).unwrap();
        let expect = 2.0 * 5.0 * (1.0 + 8.0 * z2);
        assert!((c - expect).abs() < 1e-9 * expect);
        assert!((c - 141.6).abs() < 0.1);

        assert!(c_constant(&s10, &w, 0.5).is_err());
    }

    #[test]
    fn prop_bound_formulas() {
        // s = t = 0 has c = 2 exactly, so N = 2 sits right at the constant
        let empty = SpaceParams::new(2, 2.0, 2.0, 0, 0).unwrap();
        let w = unit_weights();
        let (m_choice, bound) = prop_error_bound(&empty, &w, 2, 1.0).unwrap();
        assert_eq!(m_choice, 1.0);
        assert_eq!(bound, 2.0f64.sqrt());

        let s11 = SpaceParams::new(2, 2.0, 2.0, 1, 1).unwrap();
        let c = c_constant(&s11, &w, 1.0).unwrap();
        let n = 1u64 << 10;
        let (m_choice, bound) = prop_error_bound(&s11, &w, n, 1.0).unwrap();
        assert!((bound - 2.0f64.sqrt() * (c / n as f64).powf(1.0 / 6.0)).abs() < 1e-12);
        assert!((m_choice - (n as f64 / c).powf(1.0 / 3.0)).abs() < 1e-12);

        // doubling N scales the bound by 2^{-1/(4+2κ)}
        let (_, bound2) = prop_error_bound(&s11, &w, 2 * n, 1.0).unwrap();
        assert!((bound2 / bound - 2.0f64.powf(-1.0 / 6.0)).abs() < 1e-12);

        assert!(prop_error_bound(&s11, &w, 1000, 1.0).is_err());
    }

    #[test]
    fn sample_reuse_across_truncations() {
        let space = SpaceParams::new(2, 2.0, 2.0, 1, 1).unwrap();
        let w = unit_weights();
        let res = cbc_construct(&space, &w, 2, None).unwrap();
        let f = random_test_function(&space, &w, 30.0, 5, 21).unwrap();
        let mut calls = 0usize;
        let samples = SampledFunction::sample(&res.point_set, |x, y| {
            calls += 1;
            f.eval(x, y)
        })
        .unwrap();
        assert_eq!(calls, res.point_set.len() as usize);
        let small = approximate_sampled(&samples, &res.point_set, &space, &w, 2.0).unwrap();
        let large = approximate_sampled(&samples, &res.point_set, &space, &w, 12.0).unwrap();
        assert!(small.support().len() <= large.support().len());
        // shared indices get identical estimates
        for (i, idx) in small.support().iter().enumerate() {
            assert_eq!(large.estimate(idx).unwrap(), small.coeff_estimates()[i]);
        }
    }
}
