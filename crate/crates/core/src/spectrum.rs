//! Enumeration of the eigenvalue multiset of the embedding operator,
//! truncation sets, minimal errors and information complexity for the class
//! of all linear functionals, and the analytic tractability verdicts.

use serde::Serialize;

use crate::arith::zeta;
use crate::error::{Error, Result};
use crate::space::{
    r_1d, rho_block, weight_product, HybridIndex, SpaceParams, WeightFamily, WeightSpec,
};

/// A frequency pair together with its operator eigenvalue.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumEntry {
    pub index: HybridIndex,
    pub eigenvalue: f64,
}

/// Membership predicate of the truncation set: inverse eigenvalue at most M.
///
/// Everything that filters indices (enumeration, counting, the truncation
/// split of the approximation error) goes through this one expression, so
/// float rounding cannot make two call sites disagree.
pub fn in_a_m(
    space: &SpaceParams,
    weights: &WeightSpec,
    idx: &HybridIndex,
    m: f64,
) -> Result<bool> {
    let w = weight_product(space, weights, idx)?;
    Ok(1.0 / w <= m)
}

#[derive(Clone, Copy)]
enum Threshold {
    /// inverse eigenvalue ≤ M (truncation set membership)
    InvWeightLeq(f64),
    /// eigenvalue strictly above a level (information complexity)
    WeightGt(f64),
}

impl Threshold {
    /// Branch-pruning level: slightly below the exact boundary, so boundary
    /// profiles are still visited and decided by the canonical predicate.
    fn cut(&self) -> f64 {
        match self {
            Threshold::InvWeightLeq(m) => (1.0 / m) * (1.0 - 1e-9),
            Threshold::WeightGt(e2) => e2 * (1.0 - 1e-9),
        }
    }

    fn accepts(&self, w: f64) -> bool {
        match self {
            Threshold::InvWeightLeq(m) => 1.0 / w <= *m,
            Threshold::WeightGt(e2) => w > *e2,
        }
    }
}

/// One coordinate's contribution to a block profile: either the zero
/// frequency or a block of equal-eigenvalue frequencies (a digit block for
/// digital coordinates, a ± magnitude pair for periodic ones).
#[derive(Clone, Copy, Debug)]
enum BlockChoice {
    WalshZero,
    WalshBlock { a: u32 },
    TrigZero,
    TrigMag { n: u64 },
}

impl BlockChoice {
    fn size(&self, base: u32) -> u64 {
        match self {
            BlockChoice::WalshZero | BlockChoice::TrigZero => 1,
            BlockChoice::WalshBlock { a } => {
                (u64::from(base) - 1) * u64::from(base).pow(*a)
            }
            BlockChoice::TrigMag { .. } => 2,
        }
    }
}

struct ProfileWalker<'a> {
    space: &'a SpaceParams,
    weights: &'a WeightSpec,
    thr: Threshold,
    cut: f64,
    path: Vec<BlockChoice>,
}

impl<'a> ProfileWalker<'a> {
    fn run(
        space: &'a SpaceParams,
        weights: &'a WeightSpec,
        thr: Threshold,
        visit: &mut impl FnMut(&[BlockChoice], f64, u64),
    ) -> Result<()> {
        let mut walker = ProfileWalker {
            space,
            weights,
            thr,
            cut: thr.cut(),
            path: Vec::with_capacity(space.dim()),
        };
        walker.walk(0, 1.0, 1, visit)
    }

    fn walk(
        &mut self,
        coord: usize,
        w: f64,
        mult: u64,
        visit: &mut impl FnMut(&[BlockChoice], f64, u64),
    ) -> Result<()> {
        if coord == self.space.dim() {
            if self.thr.accepts(w) {
                visit(&self.path, w, mult);
            }
            return Ok(());
        }
        if coord < self.space.s {
            let gamma = self.weights.gamma1(coord + 1)?;
            self.descend(coord, w, mult, BlockChoice::WalshZero, 1.0, visit)?;
            for a in 0.. {
                let factor = rho_block(self.space.base, self.space.alpha, gamma, a);
                if w * factor < self.cut {
                    break;
                }
                self.descend(coord, w, mult, BlockChoice::WalshBlock { a }, factor, visit)?;
            }
        } else {
            let j = coord - self.space.s;
            let gamma = self.weights.gamma2(j + 1)?;
            self.descend(coord, w, mult, BlockChoice::TrigZero, 1.0, visit)?;
            for n in 1.. {
                let factor = r_1d(self.space.beta, gamma, n as i64);
                if w * factor < self.cut {
                    break;
                }
                self.descend(coord, w, mult, BlockChoice::TrigMag { n }, factor, visit)?;
            }
        }
        Ok(())
    }

    fn descend(
        &mut self,
        coord: usize,
        w: f64,
        mult: u64,
        choice: BlockChoice,
        factor: f64,
        visit: &mut impl FnMut(&[BlockChoice], f64, u64),
    ) -> Result<()> {
        let size = choice.size(self.space.base);
        self.path.push(choice);
        let out = self.walk(coord + 1, w * factor, mult * size, visit);
        self.path.pop();
        out
    }
}

fn expand_profile(space: &SpaceParams, profile: &[BlockChoice], w: f64, out: &mut Vec<SpectrumEntry>) {
    let base = u64::from(space.base);
    let mut k = vec![0u64; space.s];
    let mut l = vec![0i64; space.t];
    fn rec(
        space: &SpaceParams,
        base: u64,
        profile: &[BlockChoice],
        coord: usize,
        k: &mut Vec<u64>,
        l: &mut Vec<i64>,
        w: f64,
        out: &mut Vec<SpectrumEntry>,
    ) {
        if coord == profile.len() {
            out.push(SpectrumEntry {
                index: HybridIndex::new(k.clone(), l.clone()),
                eigenvalue: w,
            });
            return;
        }
        match profile[coord] {
            BlockChoice::WalshZero => {
                k[coord] = 0;
                rec(space, base, profile, coord + 1, k, l, w, out);
            }
            BlockChoice::WalshBlock { a } => {
                let lo = base.pow(a);
                for kv in lo..lo * base {
                    k[coord] = kv;
                    rec(space, base, profile, coord + 1, k, l, w, out);
                }
            }
            BlockChoice::TrigZero => {
                l[coord - space.s] = 0;
                rec(space, base, profile, coord + 1, k, l, w, out);
            }
            BlockChoice::TrigMag { n } => {
                for lv in [-(n as i64), n as i64] {
                    l[coord - space.s] = lv;
                    rec(space, base, profile, coord + 1, k, l, w, out);
                }
            }
        }
    }
    rec(space, base, profile, 0, &mut k, &mut l, w, out);
}

fn check_m(m: f64) -> Result<()> {
    if !(m >= 1.0) {
        return Err(Error::parameter(format!(
            "truncation parameter M = {m} must be at least 1"
        )));
    }
    Ok(())
}

/// All indices of the truncation set, ordered by eigenvalue descending with
/// lexicographic index order breaking ties.
pub fn enumerate_a_m(
    space: &SpaceParams,
    weights: &WeightSpec,
    m: f64,
) -> Result<Vec<SpectrumEntry>> {
    check_m(m)?;
    enumerate_truncation_set(space, weights, m)
}

/// Enumeration for any positive M: empty below 1 (no index has inverse
/// eigenvalue under 1). The truncation choice M(N) of the approximation
/// algorithm can land below 1 at small N, in which case the algorithm is the
/// zero algorithm.
pub(crate) fn enumerate_truncation_set(
    space: &SpaceParams,
    weights: &WeightSpec,
    m: f64,
) -> Result<Vec<SpectrumEntry>> {
    if !(m > 0.0) {
        return Err(Error::parameter(format!(
            "truncation parameter M = {m} must be positive"
        )));
    }
    if m < 1.0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    ProfileWalker::run(
        space,
        weights,
        Threshold::InvWeightLeq(m),
        &mut |profile, w, _| expand_profile(space, profile, w, &mut out),
    )?;
    out.sort_by(|x, y| {
        y.eigenvalue
            .total_cmp(&x.eigenvalue)
            .then_with(|| x.index.cmp(&y.index))
    });
    Ok(out)
}

/// |A_M| without materializing entries.
pub fn count_a_m(space: &SpaceParams, weights: &WeightSpec, m: f64) -> Result<u64> {
    check_m(m)?;
    let mut total = 0u64;
    ProfileWalker::run(
        space,
        weights,
        Threshold::InvWeightLeq(m),
        &mut |_, _, mult| total += mult,
    )?;
    Ok(total)
}

/// Number of eigenvalues strictly above a level.
fn count_above(space: &SpaceParams, weights: &WeightSpec, level: f64) -> Result<u64> {
    let mut total = 0u64;
    ProfileWalker::run(
        space,
        weights,
        Threshold::WeightGt(level),
        &mut |_, _, mult| total += mult,
    )?;
    Ok(total)
}

/// The cardinality bound M^κ Π (1 + 2ζ(θκ)(b^α γ_j^{(1)})^κ) Π (1 + 2ζ(θκ)(γ_j^{(2)})^κ)
/// with θ = min(α, β), valid for κ > 1/θ.
pub fn lemma_bound_a_m(
    space: &SpaceParams,
    weights: &WeightSpec,
    m: f64,
    kappa: f64,
) -> Result<f64> {
    check_m(m)?;
    let theta = space.alpha.min(space.beta);
    if kappa * theta <= 1.0 {
        return Err(Error::Divergence(format!(
            "kappa = {kappa} must exceed 1/min(alpha,beta) = {}",
            1.0 / theta
        )));
    }
    let z = zeta(theta * kappa)?;
    let b_alpha = f64::from(space.base).powf(space.alpha);
    let mut bound = m.powf(kappa);
    for j in 1..=space.s {
        bound *= 1.0 + 2.0 * z * (b_alpha * weights.gamma1(j)?).powf(kappa);
    }
    for j in 1..=space.t {
        bound *= 1.0 + 2.0 * z * weights.gamma2(j)?.powf(kappa);
    }
    Ok(bound)
}

/// The minimal worst-case error of N pieces of arbitrary linear information:
/// the square root of the (N+1)-st largest operator eigenvalue.
pub fn min_error_all(space: &SpaceParams, weights: &WeightSpec, n: u64) -> Result<f64> {
    if n == 0 {
        // the largest eigenvalue is 1 for every parameter choice
        return Ok(1.0);
    }
    if space.dim() == 0 {
        // one-dimensional span, fully resolved by a single functional
        return Ok(0.0);
    }
    let mut m = 2.0f64.max((n + 1) as f64);
    loop {
        if count_a_m(space, weights, m)? >= n + 1 {
            break;
        }
        m *= 2.0;
    }
    let entries = enumerate_a_m(space, weights, m)?;
    Ok(entries[n as usize].eigenvalue.sqrt())
}

/// Minimal number of linear functionals needed to reach worst-case error ε:
/// the count of eigenvalues strictly above ε².
pub fn info_complexity_all(space: &SpaceParams, weights: &WeightSpec, eps: f64) -> Result<u64> {
    if !(eps > 0.0) {
        return Err(Error::parameter(format!("eps = {eps} must be positive")));
    }
    if eps >= 1.0 {
        // the initial error is already 1, nothing to compute
        return Ok(0);
    }
    count_above(space, weights, eps * eps)
}

/// Summability behavior of the partial sums of a weight family.
#[derive(Clone, Copy, Debug, PartialEq)]
enum SumGrowth {
    /// Σ_{j≤n} converges to the stated limit
    Bounded(f64),
    /// Σ_{j≤n} ~ coeff · log n
    Logarithmic(f64),
    /// Σ_{j≤n} ~ C n^e with 0 < e < 1
    Sublinear(f64),
    /// Σ_{j≤n} ~ rate · n
    Linear(f64),
}

fn partial_sum_growth(fam: &WeightFamily) -> Result<SumGrowth> {
    match fam {
        WeightFamily::Explicit { .. } => Err(Error::Unsupported(
            "asymptotic analysis needs a parametric weight family, not an explicit list".into(),
        )),
        WeightFamily::Constant(c) => Ok(SumGrowth::Linear(*c)),
        WeightFamily::Polynomial { a } => {
            if *a > 1.0 {
                Ok(SumGrowth::Bounded(zeta(*a)?))
            } else if *a == 1.0 {
                Ok(SumGrowth::Logarithmic(1.0))
            } else {
                Ok(SumGrowth::Sublinear(1.0 - a))
            }
        }
        WeightFamily::Geometric { q } => {
            if *q < 1.0 {
                Ok(SumGrowth::Bounded(q / (1.0 - q)))
            } else {
                Ok(SumGrowth::Linear(1.0))
            }
        }
    }
}

fn growth_description(fam: &WeightFamily, g: SumGrowth) -> String {
    match g {
        SumGrowth::Bounded(lim) => format!("partial sums of {fam} converge to {lim:.6}"),
        SumGrowth::Logarithmic(c) => {
            format!("partial sums of {fam} grow like {c} log n (divergent, mean -> 0)")
        }
        SumGrowth::Sublinear(e) => {
            format!("partial sums of {fam} grow like n^{e:.4} (divergent, mean -> 0)")
        }
        SumGrowth::Linear(r) => {
            format!("partial sums of {fam} grow like {r} n (mean stays {r})")
        }
    }
}

/// Sum exponent of a single family: the infimum κ with Σ γ_j^κ < ∞.
fn family_sum_exponent(fam: &WeightFamily) -> Result<f64> {
    match fam {
        WeightFamily::Explicit { .. } => Err(Error::Unsupported(
            "the sum exponent is an asymptotic quantity; explicit lists are not supported".into(),
        )),
        WeightFamily::Constant(_) => Ok(f64::INFINITY),
        WeightFamily::Polynomial { a } => Ok(1.0 / a),
        WeightFamily::Geometric { q } => {
            if *q < 1.0 {
                Ok(0.0)
            } else {
                Ok(f64::INFINITY)
            }
        }
    }
}

/// The sum exponent of the weight pair (infimum κ making both sequences
/// κ-summable, ∞ when none exists).
pub fn sum_exponent(weights: &WeightSpec) -> Result<f64> {
    let e1 = family_sum_exponent(&weights.gamma1)?;
    let e2 = family_sum_exponent(&weights.gamma2)?;
    Ok(e1.max(e2))
}

#[derive(Clone, Debug, Serialize)]
pub struct ConditionEvidence {
    pub condition: String,
    pub holds: bool,
    pub detail: String,
}

/// Tractability verdicts for the embedding problem, decided analytically per
/// weight family. The two `*_std` flags report the sufficient conditions; the
/// `*_all` flags are sharp.
#[derive(Clone, Debug, Serialize)]
pub struct TractabilityReport {
    pub base: u32,
    pub alpha: f64,
    pub beta: f64,
    pub gamma1: String,
    pub gamma2: String,
    /// None encodes an infinite sum exponent.
    pub s_gamma: Option<f64>,
    pub spt_all: bool,
    pub pt_all: bool,
    /// ε-exponent of strong polynomial tractability for arbitrary linear
    /// information, present iff `spt_all`.
    pub tau_star_all: Option<f64>,
    pub wt_all: bool,
    pub spt_std: bool,
    /// [lower, upper] interval for the standard-information ε-exponent,
    /// present iff `spt_std`.
    pub std_exponent_interval: Option<(f64, f64)>,
    pub pt_std: bool,
    pub wt_std: bool,
    /// Witness summability order for the strong checks (q = 0 branch).
    pub nu_witness: Option<f64>,
    pub q_witness: f64,
    /// Cardinality-bound order used for the standard-information exponent.
    pub kappa: f64,
    pub evidence: Vec<ConditionEvidence>,
}

/// Evaluates the tractability conditions for a parametric weight pair.
pub fn tractability_report(
    base: u32,
    alpha: f64,
    beta: f64,
    weights: &WeightSpec,
) -> Result<TractabilityReport> {
    // dimensions don't matter for the asymptotics; validate the rest
    let probe = SpaceParams::new(base, alpha, beta, 0, 0)?;
    if !weights.is_parametric() {
        return Err(Error::Unsupported(
            "tractability verdicts are limits in the dimension; weight families must be \
             parametric (poly/geom/const)"
                .into(),
        ));
    }
    let g1 = partial_sum_growth(&weights.gamma1)?;
    let g2 = partial_sum_growth(&weights.gamma2)?;
    let s_gamma = sum_exponent(weights)?;
    let s_gamma_finite = s_gamma.is_finite();
    let inv_smooth = (1.0 / alpha).max(1.0 / beta);

    let spt_all = s_gamma_finite;
    let pt_all = spt_all;
    let tau_star_all = spt_all.then(|| 2.0 * s_gamma.max(inv_smooth));

    let mean_to_zero =
        !matches!(g1, SumGrowth::Linear(_)) && !matches!(g2, SumGrowth::Linear(_));
    let wt_all = mean_to_zero;
    let wt_std = mean_to_zero;

    let sums_finite =
        matches!(g1, SumGrowth::Bounded(_)) && matches!(g2, SumGrowth::Bounded(_));
    let spt_std = sums_finite;
    let std_exponent_interval = spt_std.then(|| {
        let lo = 2.0 * inv_smooth.max(s_gamma);
        (lo, 4.0 + lo)
    });

    let log_bounded = |g: SumGrowth| {
        matches!(g, SumGrowth::Bounded(_) | SumGrowth::Logarithmic(_))
    };
    let pt_std = log_bounded(g1) && log_bounded(g2);

    let evidence = vec![
        ConditionEvidence {
            condition: "s_gamma < inf (SPT/PT, all linear information)".into(),
            holds: spt_all,
            detail: format!(
                "s_gamma = {}",
                if s_gamma_finite {
                    format!("{s_gamma}")
                } else {
                    "inf".into()
                }
            ),
        },
        ConditionEvidence {
            condition: "mean of weights -> 0 (WT, both classes)".into(),
            holds: mean_to_zero,
            detail: format!(
                "{}; {}",
                growth_description(&weights.gamma1, g1),
                growth_description(&weights.gamma2, g2)
            ),
        },
        ConditionEvidence {
            condition: "both weight sums finite (SPT, standard information)".into(),
            holds: sums_finite,
            detail: format!(
                "{}; {}",
                growth_description(&weights.gamma1, g1),
                growth_description(&weights.gamma2, g2)
            ),
        },
        ConditionEvidence {
            condition: "partial sums O(log n) (PT, standard information)".into(),
            holds: pt_std,
            detail: "limsup of Σ_{j<=n} γ_j / log(n+1) finite for both sequences".into(),
        },
    ];

    let report = TractabilityReport {
        base: probe.base,
        alpha,
        beta,
        gamma1: weights.gamma1.to_string(),
        gamma2: weights.gamma2.to_string(),
        s_gamma: s_gamma_finite.then_some(s_gamma),
        spt_all,
        pt_all,
        tau_star_all,
        wt_all,
        spt_std,
        std_exponent_interval,
        pt_std,
        wt_std,
        nu_witness: s_gamma_finite.then(|| s_gamma.max(inv_smooth) + 0.25),
        q_witness: 0.0,
        kappa: 1.0,
        evidence,
    };
    // tractability notions are nested within each information class
    debug_assert!(!report.spt_all || report.pt_all);
    debug_assert!(!report.pt_all || report.wt_all);
    debug_assert!(!report.spt_std || report.pt_std);
    debug_assert!(!report.pt_std || report.wt_std);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::WeightFamily;
    use std::collections::BTreeSet;

    fn space(s: usize, t: usize) -> SpaceParams {
        SpaceParams::new(2, 2.0, 2.0, s, t).unwrap()
    }

    fn unit_weights() -> WeightSpec {
        WeightSpec::uniform(WeightFamily::Constant(1.0)).unwrap()
    }

    /// Brute-force filter over a rectangular frequency grid, sharing the
    /// canonical membership predicate.
    fn brute_force_a_m(
        space: &SpaceParams,
        weights: &WeightSpec,
        m: f64,
        kmax: u64,
        lmax: i64,
    ) -> BTreeSet<HybridIndex> {
        let mut out = BTreeSet::new();
        let mut k = vec![0u64; space.s];
        let mut l = vec![0i64; space.t];
        fn rec(
            space: &SpaceParams,
            weights: &WeightSpec,
            m: f64,
            kmax: u64,
            lmax: i64,
            coord: usize,
            k: &mut Vec<u64>,
            l: &mut Vec<i64>,
            out: &mut BTreeSet<HybridIndex>,
        ) {
            if coord == space.dim() {
                let idx = HybridIndex::new(k.clone(), l.clone());
                if in_a_m(space, weights, &idx, m).unwrap() {
                    out.insert(idx);
                }
                return;
            }
            if coord < space.s {
                for kv in 0..=kmax {
                    k[coord] = kv;
                    rec(space, weights, m, kmax, lmax, coord + 1, k, l, out);
                }
            } else {
                for lv in -lmax..=lmax {
                    l[coord - space.s] = lv;
                    rec(space, weights, m, kmax, lmax, coord + 1, k, l, out);
                }
            }
        }
        rec(space, weights, m, kmax, lmax, 0, &mut k, &mut l, &mut out);
        out
    }

    #[test]
    fn worked_truncation_sets() {
        let w = unit_weights();

        let s10 = space(1, 0);
        let entries = enumerate_a_m(&s10, &w, 10.0).unwrap();
        let ks: Vec<u64> = entries.iter().map(|e| e.index.k[0]).collect();
        assert_eq!(entries.len(), 4);
        assert_eq!(
            ks.iter().copied().collect::<BTreeSet<_>>(),
            BTreeSet::from([0, 1, 2, 3])
        );
        assert_eq!(count_a_m(&s10, &w, 10.0).unwrap(), 4);

        let s01 = space(0, 1);
        let entries = enumerate_a_m(&s01, &w, 10.0).unwrap();
        assert_eq!(entries.len(), 7);
        let ls: BTreeSet<i64> = entries.iter().map(|e| e.index.l[0]).collect();
        assert_eq!(ls, BTreeSet::from([-3, -2, -1, 0, 1, 2, 3]));
        assert_eq!(count_a_m(&s01, &w, 10.0).unwrap(), 7);

        let s11 = space(1, 1);
        assert_eq!(enumerate_a_m(&s11, &w, 4.0).unwrap().len(), 16);
        assert_eq!(count_a_m(&s11, &w, 4.0).unwrap(), 16);

        assert!(enumerate_a_m(&s10, &w, 0.5).is_err());
        assert!(count_a_m(&s10, &w, 0.5).is_err());
    }

    #[test]
    fn enumeration_matches_brute_force() {
        // grids extend past the per-config cutoffs for every tested M
        let configs = [
            (space(1, 0), unit_weights(), 64u64, 32i64),
            (space(0, 1), unit_weights(), 64, 32),
            (space(1, 1), unit_weights(), 64, 32),
            (
                space(2, 2),
                WeightSpec::uniform(WeightFamily::Polynomial { a: 2.0 }).unwrap(),
                31,
                15,
            ),
            (
                SpaceParams::new(3, 1.5, 2.5, 1, 1).unwrap(),
                WeightSpec::new(
                    WeightFamily::Geometric { q: 0.5 },
                    WeightFamily::Explicit {
                        values: vec![1.0, 0.5],
                        pad: true,
                    },
                )
                .unwrap(),
                40,
                15,
            ),
        ];
        for (sp, w, kmax, lmax) in &configs {
            for m in [1.0, 4.0, 10.0, 100.0] {
                let fast: BTreeSet<HybridIndex> = enumerate_a_m(sp, w, m)
                    .unwrap()
                    .into_iter()
                    .map(|e| e.index)
                    .collect();
                let slow = brute_force_a_m(sp, w, m, *kmax, *lmax);
                assert_eq!(fast, slow, "mismatch at s={} t={} M={m}", sp.s, sp.t);
                assert_eq!(count_a_m(sp, w, m).unwrap() as usize, fast.len());
            }
        }
    }

    #[test]
    fn enumeration_is_sorted_with_lex_tiebreak() {
        let w = unit_weights();
        let entries = enumerate_a_m(&space(1, 1), &w, 16.0).unwrap();
        for pair in entries.windows(2) {
            assert!(
                pair[0].eigenvalue > pair[1].eigenvalue
                    || (pair[0].eigenvalue == pair[1].eigenvalue
                        && pair[0].index < pair[1].index)
            );
        }
        // entry eigenvalues agree with the weight product of their index
        for e in &entries {
            let w_direct = weight_product(&space(1, 1), &w, &e.index).unwrap();
            assert_eq!(e.eigenvalue, w_direct);
        }
    }

    #[test]
    fn count_is_monotone_in_m() {
        let w = WeightSpec::uniform(WeightFamily::Polynomial { a: 2.0 }).unwrap();
        let sp = space(2, 1);
        let mut prev = 0;
        for m in [1.0, 2.0, 4.0, 8.0, 100.0, 1000.0] {
            let c = count_a_m(&sp, &w, m).unwrap();
            assert!(c >= prev);
            prev = c;
        }
    }

    #[test]
    fn min_error_examples() {
        let w = unit_weights();
        let s10 = space(1, 0);
        assert_eq!(min_error_all(&s10, &w, 0).unwrap(), 1.0);
        assert_eq!(min_error_all(&s10, &w, 2).unwrap(), 0.5);
        assert_eq!(min_error_all(&s10, &w, 4).unwrap(), 0.25);
        // eigenvalues sorted: 1, 1, 1/4, 1/4, 1/16, ...
        let s00 = space(0, 0);
        assert_eq!(min_error_all(&s00, &w, 0).unwrap(), 1.0);
        assert_eq!(min_error_all(&s00, &w, 3).unwrap(), 0.0);
    }

    #[test]
    fn min_error_is_non_increasing() {
        let w = WeightSpec::uniform(WeightFamily::Polynomial { a: 2.0 }).unwrap();
        let sp = space(1, 1);
        let mut prev = f64::INFINITY;
        for n in 0..40 {
            let e = min_error_all(&sp, &w, n).unwrap();
            assert!(e <= prev + 1e-15);
            prev = e;
        }
    }

    #[test]
    fn info_complexity_examples() {
        let w = unit_weights();
        let s10 = space(1, 0);
        assert_eq!(info_complexity_all(&s10, &w, 0.6).unwrap(), 2);
        assert_eq!(info_complexity_all(&s10, &w, 0.4).unwrap(), 4);
        let half = WeightSpec::uniform(WeightFamily::Constant(0.5)).unwrap();
        assert_eq!(info_complexity_all(&s10, &half, 0.999).unwrap(), 1);
        assert!(info_complexity_all(&s10, &w, 0.0).is_err());
        assert_eq!(info_complexity_all(&s10, &w, 1.0).unwrap(), 0);
    }

    #[test]
    fn complexity_and_error_are_consistent() {
        let configs = [
            (space(1, 0), unit_weights()),
            (space(1, 1), unit_weights()),
            (
                space(2, 1),
                WeightSpec::uniform(WeightFamily::Polynomial { a: 2.0 }).unwrap(),
            ),
            (
                space(1, 2),
                WeightSpec::uniform(WeightFamily::Geometric { q: 0.5 }).unwrap(),
            ),
        ];
        for (sp, w) in &configs {
            for eps in [0.9, 0.5, 0.3, 0.1] {
                let n = info_complexity_all(sp, w, eps).unwrap();
                assert!(min_error_all(sp, w, n).unwrap() <= eps);
                if n > 0 {
                    assert!(min_error_all(sp, w, n - 1).unwrap() > eps);
                }
            }
        }
    }

    #[test]
    fn lemma_bound_dominates_count() {
        let w = unit_weights();
        let s10 = space(1, 0);
        let b = lemma_bound_a_m(&s10, &w, 10.0, 1.0).unwrap();
        assert!((b - 10.0 * (1.0 + 8.0 * zeta(2.0).unwrap())).abs() < 1e-9);
        assert!(b >= count_a_m(&s10, &w, 10.0).unwrap() as f64);

        let s01 = space(0, 1);
        let b = lemma_bound_a_m(&s01, &w, 10.0, 1.0).unwrap();
        assert!((b - 10.0 * (1.0 + 2.0 * zeta(2.0).unwrap())).abs() < 1e-9);
        assert!(b >= 7.0);

        let s00 = space(0, 0);
        assert_eq!(lemma_bound_a_m(&s00, &w, 1.0, 1.0).unwrap(), 1.0);

        assert!(lemma_bound_a_m(&s10, &w, 10.0, 0.5).is_err());
    }

    #[test]
    fn sum_exponent_per_family() {
        let poly = WeightSpec::uniform(WeightFamily::Polynomial { a: 2.0 }).unwrap();
        assert_eq!(sum_exponent(&poly).unwrap(), 0.5);
        let geom = WeightSpec::uniform(WeightFamily::Geometric { q: 0.5 }).unwrap();
        assert_eq!(sum_exponent(&geom).unwrap(), 0.0);
        let ones = unit_weights();
        assert!(sum_exponent(&ones).unwrap().is_infinite());
        let list = WeightSpec::uniform(WeightFamily::Explicit {
            values: vec![1.0],
            pad: true,
        })
        .unwrap();
        assert!(matches!(sum_exponent(&list), Err(Error::Unsupported(_))));
    }

    #[test]
    fn tractability_worked_families() {
        // γ_j = j^{-2}: everything holds, τ* = 1, std interval [1, 5]
        let w = WeightSpec::uniform(WeightFamily::Polynomial { a: 2.0 }).unwrap();
        let rep = tractability_report(2, 2.0, 2.0, &w).unwrap();
        assert!(rep.spt_all && rep.pt_all && rep.wt_all);
        assert_eq!(rep.tau_star_all, Some(1.0));
        assert!(rep.spt_std && rep.pt_std && rep.wt_std);
        assert_eq!(rep.std_exponent_interval, Some((1.0, 5.0)));

        // γ_j = 1: nothing holds, not even weak tractability
        let ones = unit_weights();
        let rep = tractability_report(2, 2.0, 2.0, &ones).unwrap();
        assert!(!rep.wt_all && !rep.pt_all && !rep.spt_all);
        assert!(!rep.wt_std && !rep.pt_std && !rep.spt_std);
        assert!(rep.s_gamma.is_none());

        // γ_j = 1/j: weakly tractable, PT(std) sufficient condition holds,
        // SPT(std) condition fails (harmonic divergence)
        let harmonic = WeightSpec::uniform(WeightFamily::Polynomial { a: 1.0 }).unwrap();
        let rep = tractability_report(2, 2.0, 2.0, &harmonic).unwrap();
        assert!(rep.wt_all && rep.wt_std);
        assert!(rep.pt_std);
        assert!(!rep.spt_std);
        assert!(rep.spt_all); // s_gamma = 1 is finite
        assert_eq!(rep.tau_star_all, Some(2.0));

        // explicit lists are rejected
        let list = WeightSpec::uniform(WeightFamily::Explicit {
            values: vec![0.5],
            pad: true,
        })
        .unwrap();
        assert!(matches!(
            tractability_report(2, 2.0, 2.0, &list),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn eigenvalue_power_sums_approach_product_formula() {
        // Σ_{A_M} λ^ν -> Π (1 + γ^ν μ(αν)) Π (1 + γ^ν 2ζ(βν)) as M grows
        let sp = space(1, 1);
        let w = unit_weights();
        let nu = 1.0;
        let entries = enumerate_a_m(&sp, &w, 1e6).unwrap();
        let partial: f64 = entries.iter().map(|e| e.eigenvalue.powf(nu)).sum();
        let full = (1.0 + crate::arith::mu(2, 2.0).unwrap())
            * (1.0 + 2.0 * zeta(2.0).unwrap());
        assert!(
            (partial - full).abs() / full < 0.01,
            "partial {partial} vs product {full}"
        );
    }
}
