use std::f64::consts::TAU;

use super::params::{HybridIndex, SpaceParams};
use super::weights::WeightSpec;
use crate::arith::{bernoulli_poly, floor_log, mu, zeta, Rational01};
use crate::error::{Error, Result};

/// Series truncation target for the periodic kernel at non-even smoothness.
const KOROBOV_TOL: f64 = 1e-10;
/// Hard cap on series length; beyond this the certified tail cannot reach
/// the target and evaluation fails rather than silently degrading.
const KOROBOV_MAX_TERMS: u64 = 1 << 26;

/// One-dimensional eigenvalue factor for a digital frequency k.
pub(crate) fn rho_1d(base: u32, alpha: f64, gamma: f64, k: u64) -> f64 {
    if k == 0 {
        1.0
    } else {
        rho_block(base, alpha, gamma, floor_log(u64::from(base), k))
    }
}

/// Shared eigenvalue factor of every digital frequency in the block
/// b^a ≤ k < b^{a+1}; enumeration folds exactly this value so that block
/// weights agree bit-for-bit with per-index weights.
pub(crate) fn rho_block(base: u32, alpha: f64, gamma: f64, a: u32) -> f64 {
    gamma * f64::from(base).powf(-alpha * f64::from(a))
}

/// One-dimensional eigenvalue factor for a periodic frequency l.
pub(crate) fn r_1d(beta: f64, gamma: f64, l: i64) -> f64 {
    if l == 0 {
        1.0
    } else {
        gamma * (l.unsigned_abs() as f64).powf(-beta)
    }
}

/// The eigenvalue attached to a frequency pair: the product of the
/// per-coordinate weight factors.
pub fn weight_product(space: &SpaceParams, weights: &WeightSpec, idx: &HybridIndex) -> Result<f64> {
    space.check_index_dims(idx.k.len(), idx.l.len())?;
    let mut w = 1.0f64;
    for (j, &k) in idx.k.iter().enumerate() {
        w *= rho_1d(space.base, space.alpha, weights.gamma1(j + 1)?, k);
    }
    for (j, &l) in idx.l.iter().enumerate() {
        w *= r_1d(space.beta, weights.gamma2(j + 1)?, l);
    }
    Ok(w)
}

/// Digital kernel factor from the position of the first nonzero digit of the
/// difference argument (`None` means the argument is zero).
///
/// Block sums of the digital characters collapse to a sharp cutoff, which
/// turns the kernel series into the finite geometric expression used here;
/// the zero case is the full series value.
pub(crate) fn walsh_factor_from_first_digit(
    base: u32,
    alpha: f64,
    gamma: f64,
    first_nonzero: Option<u32>,
) -> Result<f64> {
    if alpha <= 1.0 {
        return Err(Error::Divergence(format!(
            "digital kernel needs alpha > 1, got {alpha}"
        )));
    }
    let bf = f64::from(base);
    let phi = match first_nonzero {
        None => mu(base, alpha)?,
        Some(i0) => {
            let q = bf.powf(1.0 - alpha);
            // (b-1) Σ_{a=0}^{i0-2} q^a  -  q^{i0-1}
            let head = (bf - 1.0) * (1.0 - q.powi(i0 as i32 - 1)) / (1.0 - q);
            head - q.powi(i0 as i32 - 1)
        }
    };
    Ok(1.0 + gamma * phi)
}

/// One-dimensional digital kernel factor at a difference point z.
pub fn kernel_1d_walsh(base: u32, alpha: f64, gamma: f64, z: &Rational01) -> Result<f64> {
    crate::arith::check_prime_base(base)?;
    walsh_factor_from_first_digit(base, alpha, gamma, z.first_nonzero_digit(base))
}

/// Digital kernel factor for a pair of points, using only the position of
/// their first differing digit (equivalent to evaluating at the digitwise
/// difference, but total on all rationals).
pub fn kernel_1d_walsh_diff(
    base: u32,
    alpha: f64,
    gamma: f64,
    x: &Rational01,
    x2: &Rational01,
) -> Result<f64> {
    walsh_factor_from_first_digit(base, alpha, gamma, x.first_digit_difference(x2, base))
}

/// One-dimensional periodic kernel factor at a difference point z:
/// 1 + γ Σ_{l≠0} |l|^{-β} exp(2πi l z).
///
/// Even integer β uses the Bernoulli-polynomial closed form. Otherwise the
/// series is truncated with a certified tail below 1e-10, choosing the cheaper
/// of the monotone tail bound and the oscillation (partial-summation) bound;
/// if neither reaches the target within 2^26 terms the evaluation fails.
pub fn kernel_1d_korobov(beta: f64, gamma: f64, z: &Rational01) -> Result<f64> {
    if beta <= 1.0 {
        return Err(Error::Divergence(format!(
            "periodic kernel needs beta > 1, got {beta}"
        )));
    }
    korobov_factor(beta, gamma, z)
}

pub(crate) fn korobov_factor(beta: f64, gamma: f64, z: &Rational01) -> Result<f64> {
    // The factor is even in z; fold to [0, 1/2] so that z and 1-z evaluate
    // through bit-identical arithmetic (kernel symmetry is exact).
    let z = if 2 * z.numer() > z.denom() {
        Rational01::new(z.denom() - z.numer(), z.denom()).expect("folded difference in range")
    } else {
        *z
    };
    let z = &z;
    if beta.fract() == 0.0 && (beta as u64) % 2 == 0 && beta <= 60.0 {
        let n = beta as usize;
        let sign = if (n / 2) % 2 == 0 { -1.0 } else { 1.0 };
        let fact: f64 = (1..=n).map(|i| i as f64).product();
        let series = sign * TAU.powi(n as i32) * bernoulli_poly(n, z.to_f64()) / fact;
        return Ok(1.0 + gamma * series);
    }
    if z.is_zero() {
        return Ok(1.0 + 2.0 * gamma * zeta(beta)?);
    }
    // 2γ Σ_{l=1}^{L} l^{-β} cos(2πlz), L chosen so the certified tail is small:
    //   monotone bound      2γ L^{1-β} / (β-1)
    //   oscillation bound   4γ (L+1)^{-β} / sin(πz)
    let sin_pi_z = (std::f64::consts::PI * z.to_f64()).sin().abs();
    let l_direct = (2.0 * gamma / (KOROBOV_TOL * (beta - 1.0))).powf(1.0 / (beta - 1.0));
    let l_osc = (4.0 * gamma / (KOROBOV_TOL * sin_pi_z)).powf(1.0 / beta);
    let l = l_direct.min(l_osc).ceil();
    if !(l.is_finite() && l <= KOROBOV_MAX_TERMS as f64) {
        return Err(Error::Precision(format!(
            "periodic kernel series for beta = {beta} at z = {z} cannot certify 1e-10"
        )));
    }
    let l = (l as u64).max(8);
    // residues of l·num mod den advance by a fixed step; Kahan-compensated sum
    let den = z.denom();
    let step = z.numer();
    let mut res: u64 = 0;
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for li in 1..=l {
        res += step;
        if res >= den {
            res -= den;
        }
        let term = (li as f64).powf(-beta) * (TAU * res as f64 / den as f64).cos();
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    Ok(1.0 + 2.0 * gamma * sum)
}

/// Kernel value at a pair of points of the product domain.
pub fn kernel_eval(
    space: &SpaceParams,
    weights: &WeightSpec,
    p1: (&[Rational01], &[Rational01]),
    p2: (&[Rational01], &[Rational01]),
) -> Result<f64> {
    space.check_point_dims(p1.0.len(), p1.1.len())?;
    space.check_point_dims(p2.0.len(), p2.1.len())?;
    if space.alpha <= 1.0 || space.beta <= 1.0 {
        return Err(Error::Divergence("kernel needs alpha, beta > 1".into()));
    }
    let mut acc = 1.0f64;
    for j in 0..space.s {
        acc *= kernel_1d_walsh_diff(
            space.base,
            space.alpha,
            weights.gamma1(j + 1)?,
            &p1.0[j],
            &p2.0[j],
        )?;
    }
    for j in 0..space.t {
        let diff = p1.1[j].sub_mod1(&p2.1[j]);
        acc *= korobov_factor(space.beta, weights.gamma2(j + 1)?, &diff)?;
    }
    Ok(acc)
}

/// Kernel value on the diagonal: Π (1 + γ_j^{(1)} μ(α)) · Π (1 + 2 γ_j^{(2)} ζ(β)).
pub fn kernel_diag(space: &SpaceParams, weights: &WeightSpec) -> Result<f64> {
    let mu_a = mu(space.base, space.alpha)?;
    let zeta_b = zeta(space.beta)?;
    let mut acc = 1.0f64;
    for j in 1..=space.s {
        acc *= 1.0 + weights.gamma1(j)? * mu_a;
    }
    for j in 1..=space.t {
        acc *= 1.0 + 2.0 * weights.gamma2(j)? * zeta_b;
    }
    Ok(acc)
}
