use super::rational::Rational01;
use super::walsh::cis_frac;
use super::Complex;

/// Evaluates Σ_r buckets[r]·exp(2πi r/n) for n = buckets.len(), where n must
/// be a power of the prime b (n = 1 is allowed).
///
/// Before touching any floating-point root of unity, the top block of
/// exponents is eliminated through the cyclotomic relation
/// ω^{(b-1)n/b + u} = -Σ_{j<b-1} ω^{jn/b + u}. The surviving exponents form a
/// power basis, so a combination that cancels in exact arithmetic reaches the
/// summation stage as literal zero coefficients and the result is exactly 0.
/// Character sums over digital point sets hit exactly this case.
pub fn prime_power_phase_sum(b: u32, buckets: &[Complex]) -> Complex {
    let n = buckets.len();
    assert!(n > 0, "empty bucket vector");
    if n == 1 {
        return buckets[0];
    }
    let b = b as usize;
    debug_assert!(is_power_of(b, n), "bucket count {n} is not a power of {b}");
    let blk = n / b;
    let top = (b - 1) * blk;
    let mut total = Complex::new(0.0, 0.0);
    for r in 0..top {
        let reduced = buckets[r] - buckets[top + (r % blk)];
        if reduced.re == 0.0 && reduced.im == 0.0 {
            continue;
        }
        total += reduced * cis_frac(&Rational01::new(r as u64, n as u64).expect("r < n"));
    }
    total
}

fn is_power_of(b: usize, mut n: usize) -> bool {
    while n % b == 0 {
        n /= b;
    }
    n == 1
}
