use std::f64::consts::TAU;

use super::rational::Rational01;
use super::special::check_prime_base;
use super::Complex;
use crate::error::{Error, Result};

/// `exp(2πi θ)` for a phase already reduced to `[0,1)` exactly.
///
/// Keeping the reduction in rational arithmetic avoids phase drift for large
/// frequency-coordinate products; this is the only place a trig call happens.
/// Quarter phases produce exact unit values, so base-2 characters are exactly
/// ±1 and their cancellations survive in floating point.
pub fn cis_frac(theta: &Rational01) -> Complex {
    match (theta.numer(), theta.denom()) {
        (_, 1) => Complex::new(1.0, 0.0),
        (1, 2) => Complex::new(-1.0, 0.0),
        (1, 4) => Complex::new(0.0, 1.0),
        (3, 4) => Complex::new(0.0, -1.0),
        _ => Complex::from_polar(1.0, TAU * theta.to_f64()),
    }
}

/// Phase numerator (mod b) of the k-th Walsh function at x: the digit sum
/// ξ_1 κ_0 + … + ξ_{a+1} κ_a with a = ⌊log_b k⌋.
pub fn walsh_phase(b: u32, k: u64, x: &Rational01) -> u64 {
    if k == 0 {
        return 0;
    }
    let bb = u64::from(b);
    let mut k = k;
    let mut acc: u64 = 0;
    for xi in x.digits(b) {
        if k == 0 {
            break;
        }
        let kappa = k % bb;
        k /= bb;
        acc = (acc + u64::from(xi) * kappa) % bb;
    }
    acc
}

/// The k-th base-b Walsh function at x.
pub fn walsh_1d(b: u32, k: u64, x: &Rational01) -> Result<Complex> {
    check_prime_base(b)?;
    let phase = walsh_phase(b, k, x);
    Ok(cis_frac(&Rational01::new(phase, u64::from(b)).expect("phase < b")))
}

/// Combined phase numerator (mod b) of a multivariate Walsh function.
pub fn walsh_phase_multi(b: u32, ks: &[u64], xs: &[Rational01]) -> Result<u64> {
    if ks.len() != xs.len() {
        return Err(Error::dimension(format!(
            "walsh index has {} components, point has {}",
            ks.len(),
            xs.len()
        )));
    }
    let bb = u64::from(b);
    let mut acc = 0u64;
    for (k, x) in ks.iter().zip(xs) {
        acc = (acc + walsh_phase(b, *k, x)) % bb;
    }
    Ok(acc)
}

/// Product of one-dimensional Walsh functions; the empty product is 1.
pub fn walsh_multi(b: u32, ks: &[u64], xs: &[Rational01]) -> Result<Complex> {
    check_prime_base(b)?;
    let phase = walsh_phase_multi(b, ks, xs)?;
    Ok(cis_frac(&Rational01::new(phase, u64::from(b)).expect("phase < b")))
}

/// The fractional part of l·y, computed exactly.
pub fn frac_dot(ls: &[i64], ys: &[Rational01]) -> Result<Rational01> {
    if ls.len() != ys.len() {
        return Err(Error::dimension(format!(
            "frequency vector has {} components, point has {}",
            ls.len(),
            ys.len()
        )));
    }
    let mut acc = Rational01::zero();
    for (&l, y) in ls.iter().zip(ys) {
        // {l y} for a single coordinate: reduce l mod den first.
        let den = y.denom();
        let l_mod = l.rem_euclid(den as i64) as u64;
        let num = u128::from(l_mod) * u128::from(y.numer());
        acc = acc.add_mod1(&Rational01::from_mod(num, den));
    }
    Ok(acc)
}

/// The l-th trigonometric function exp(2πi l·y); the empty product is 1.
pub fn trig_multi(ls: &[i64], ys: &[Rational01]) -> Result<Complex> {
    Ok(cis_frac(&frac_dot(ls, ys)?))
}

/// Digitwise sum mod b of the first m digits of x and y.
pub fn digit_add(b: u32, x: &Rational01, y: &Rational01, m: u32) -> Result<Rational01> {
    digit_op(b, x, y, m, |a, c, b| (a + c) % b)
}

/// Digitwise difference mod b of the first m digits of x and y.
pub fn digit_sub(b: u32, x: &Rational01, y: &Rational01, m: u32) -> Result<Rational01> {
    digit_op(b, x, y, m, |a, c, b| (a + b - c) % b)
}

fn digit_op(
    b: u32,
    x: &Rational01,
    y: &Rational01,
    m: u32,
    op: fn(u16, u16, u16) -> u16,
) -> Result<Rational01> {
    check_prime_base(b)?;
    let dx = x.to_digits(b, m)?;
    let dy = y.to_digits(b, m)?;
    let digits: Vec<u8> = dx
        .digits()
        .iter()
        .zip(dy.digits())
        .map(|(&a, &c)| op(u16::from(a), u16::from(c), b as u16) as u8)
        .collect();
    Ok(super::rational::DigitVector::new(b, digits)?.to_rational())
}

/// Digitwise (carry-free) sum of non-negative integers in base b.
pub fn index_digit_add(b: u32, k: u64, h: u64) -> u64 {
    index_digit_op(b, k, h, |a, c, b| (a + c) % b)
}

/// Digitwise (carry-free) difference of non-negative integers in base b.
pub fn index_digit_sub(b: u32, k: u64, h: u64) -> u64 {
    index_digit_op(b, k, h, |a, c, b| (a + b - c) % b)
}

fn index_digit_op(b: u32, k: u64, h: u64, op: fn(u64, u64, u64) -> u64) -> u64 {
    let bb = u64::from(b);
    let (mut k, mut h) = (k, h);
    let mut out = 0u64;
    let mut place = 1u64;
    while k > 0 || h > 0 {
        out += op(k % bb, h % bb, bb) * place;
        k /= bb;
        h /= bb;
        place *= bb;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: u64, d: u64) -> Rational01 {
        Rational01::new(n, d).unwrap()
    }

    fn assert_close(z: Complex, w: Complex) {
        assert!((z - w).norm() < 1e-12, "{z} != {w}");
    }

    #[test]
    fn walsh_values_from_digit_formula() {
        assert_close(walsh_1d(2, 0, &r(3, 4)).unwrap(), Complex::new(1.0, 0.0));
        assert_close(walsh_1d(2, 1, &r(1, 2)).unwrap(), Complex::new(-1.0, 0.0));
        assert_close(walsh_1d(2, 2, &r(3, 4)).unwrap(), Complex::new(-1.0, 0.0));
        let third = Complex::from_polar(1.0, TAU / 3.0);
        assert_close(walsh_1d(3, 1, &r(1, 3)).unwrap(), third);
    }

    #[test]
    fn walsh_rejects_non_prime_base() {
        assert!(walsh_1d(4, 1, &r(1, 2)).is_err());
        assert!(walsh_1d(1, 0, &Rational01::zero()).is_err());
    }

    #[test]
    fn walsh_multi_products() {
        let one = Complex::new(1.0, 0.0);
        assert_close(
            walsh_multi(2, &[0, 0], &[r(1, 2), r(1, 4)]).unwrap(),
            one,
        );
        assert_close(
            walsh_multi(2, &[1, 1], &[r(1, 2), r(1, 2)]).unwrap(),
            one,
        );
        assert_close(
            walsh_multi(2, &[1, 2], &[r(1, 2), r(3, 4)]).unwrap(),
            one,
        );
        // empty product
        assert_close(walsh_multi(2, &[], &[]).unwrap(), one);
        assert!(walsh_multi(2, &[1], &[]).is_err());
    }

    #[test]
    fn trig_values() {
        let one = Complex::new(1.0, 0.0);
        assert_close(trig_multi(&[0, 0], &[r(1, 3), r(2, 3)]).unwrap(), one);
        assert_close(trig_multi(&[1], &[r(1, 4)]).unwrap(), Complex::new(0.0, 1.0));
        assert_close(trig_multi(&[1, 2], &[r(1, 2), r(1, 4)]).unwrap(), one);
        assert!(trig_multi(&[1], &[]).is_err());
    }

    #[test]
    fn trig_phase_handles_negative_frequencies() {
        // -1 * 1/4 = -1/4 ≡ 3/4 (mod 1)
        assert_eq!(frac_dot(&[-1], &[r(1, 4)]).unwrap(), r(3, 4));
        // large frequencies reduce exactly
        assert_eq!(frac_dot(&[1_000_003], &[r(1, 4)]).unwrap(), r(3, 4));
    }

    #[test]
    fn digit_sub_examples() {
        assert_eq!(digit_sub(2, &r(3, 4), &r(3, 4), 2).unwrap(), Rational01::zero());
        assert_eq!(digit_sub(2, &r(3, 4), &r(1, 2), 2).unwrap(), r(1, 4));
        assert_eq!(digit_sub(3, &r(2, 3), &r(1, 3), 1).unwrap(), r(1, 3));
        assert!(digit_sub(2, &r(1, 3), &r(1, 2), 4).is_err());
    }

    #[test]
    fn index_digit_ops() {
        // base 2: digitwise ops are XOR
        assert_eq!(index_digit_add(2, 5, 3), 6);
        assert_eq!(index_digit_sub(2, 5, 3), 6);
        // base 3: 5 = (2,1), 7 = (1,2) -> add = (0,0) with no carries
        assert_eq!(index_digit_add(3, 5, 7), 0);
        assert_eq!(index_digit_sub(3, 5, 7), 7);
        assert_eq!(index_digit_add(3, index_digit_sub(3, 5, 7), 7), 5);
    }

    #[test]
    fn modulus_one_everywhere() {
        for k in 0..32u64 {
            for num in 0..8u64 {
                let x = r(num, 8);
                assert!((walsh_1d(2, k, &x).unwrap().norm() - 1.0).abs() < 1e-12);
                assert!((walsh_1d(3, k, &r(num, 9)).unwrap().norm() - 1.0).abs() < 1e-12);
            }
        }
        for l in -5i64..=5 {
            assert!((trig_multi(&[l], &[r(2, 7)]).unwrap().norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn character_property_on_digit_vectors() {
        // wal_k(x) wal_k(x') = wal_k(x ⊕ x') for m-digit x, x'
        for b in [2u32, 3] {
            let m = 3u32;
            let n = u64::from(b).pow(m);
            for k in 0..n {
                for xi in 0..n {
                    for yi in (0..n).step_by(3) {
                        let x = r(xi, n);
                        let y = r(yi, n);
                        let lhs = walsh_1d(b, k, &x).unwrap() * walsh_1d(b, k, &y).unwrap();
                        let sum = digit_add(b, &x, &y, m).unwrap();
                        let rhs = walsh_1d(b, k, &sum).unwrap();
                        assert_close(lhs, rhs);
                        let lhs = walsh_1d(b, k, &x).unwrap()
                            * walsh_1d(b, k, &y).unwrap().conj();
                        let diff = digit_sub(b, &x, &y, m).unwrap();
                        assert_close(lhs, walsh_1d(b, k, &diff).unwrap());
                    }
                }
            }
        }
    }
}
