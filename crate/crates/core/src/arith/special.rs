use crate::error::{Error, Result};

pub fn is_prime(b: u32) -> bool {
    if b < 2 {
        return false;
    }
    if b % 2 == 0 {
        return b == 2;
    }
    let mut d = 3u32;
    while (d as u64) * (d as u64) <= b as u64 {
        if b % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn check_prime_base(b: u32) -> Result<()> {
    if is_prime(b) {
        Ok(())
    } else {
        Err(Error::parameter(format!("base {b} is not prime")))
    }
}

/// ⌊log_base k⌋ for k ≥ 1, by exact integer comparison.
pub fn floor_log(base: u64, k: u64) -> u32 {
    debug_assert!(base >= 2 && k >= 1);
    let mut a = 0u32;
    let mut p = base;
    while p <= k {
        match p.checked_mul(base) {
            Some(next) => p = next,
            None => break,
        }
        a += 1;
    }
    // handle the overflow break: p already exceeded k/base
    while u128::from(base).pow(a + 1) <= u128::from(k) {
        a += 1;
    }
    a
}

/// b^x (b-1) / (b^x - b) for x > 1: the value of Σ_{k ≥ 1} b^{-x ⌊log_b k⌋}.
pub fn mu(b: u32, x: f64) -> Result<f64> {
    check_prime_base(b)?;
    if x <= 1.0 {
        return Err(Error::Divergence(format!(
            "mu(b={b}, x={x}) requires x > 1"
        )));
    }
    let bf = f64::from(b);
    let bx = bf.powf(x);
    Ok(bx * (bf - 1.0) / (bx - bf))
}

/// Riemann zeta for real x > 1, by direct summation with an Euler-Maclaurin
/// tail correction. Accurate to well below 1e-12 over the range used here.
pub fn zeta(x: f64) -> Result<f64> {
    if x <= 1.0 {
        return Err(Error::Divergence(format!("zeta({x}) diverges for x <= 1")));
    }
    let n = 1000u64;
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for k in 1..=n {
        // Kahan summation: the series has ~1e3 terms of similar size.
        let term = (k as f64).powf(-x);
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    let nf = n as f64;
    let tail = nf.powf(1.0 - x) / (x - 1.0) - 0.5 * nf.powf(-x)
        + x / 12.0 * nf.powf(-x - 1.0)
        - x * (x + 1.0) * (x + 2.0) / 720.0 * nf.powf(-x - 3.0)
        + x * (x + 1.0) * (x + 2.0) * (x + 3.0) * (x + 4.0) / 30240.0 * nf.powf(-x - 5.0);
    Ok(sum + tail)
}

/// Bernoulli numbers B_0 … B_n (B_1 = -1/2 convention).
fn bernoulli_numbers(n: usize) -> Vec<f64> {
    let mut b = vec![0.0f64; n + 1];
    b[0] = 1.0;
    // Σ_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
    for m in 1..=n {
        let mut acc = 0.0;
        let mut binom = 1.0f64; // C(m+1, 0)
        for (j, bj) in b.iter().enumerate().take(m) {
            acc += binom * bj;
            binom = binom * ((m + 1 - j) as f64) / ((j + 1) as f64);
        }
        b[m] = -acc / ((m + 1) as f64);
    }
    b
}

/// The Bernoulli polynomial B_n evaluated at x ∈ [0,1].
pub fn bernoulli_poly(n: usize, x: f64) -> f64 {
    let bnum = bernoulli_numbers(n);
    // B_n(x) = Σ_k C(n,k) B_k x^{n-k}
    let mut acc = 0.0f64;
    let mut binom = 1.0f64; // C(n, 0)
    for (k, bk) in bnum.iter().enumerate() {
        acc += binom * bk * x.powi((n - k) as i32);
        binom = binom * ((n - k) as f64) / ((k + 1) as f64);
    }
    acc
}
