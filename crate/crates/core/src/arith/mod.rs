//! Exact base-b digit arithmetic and the character functions built on it.
//!
//! Coordinates live on the unit interval as exact rationals; digit expansions
//! are produced by long division of the numerator, never by floating-point
//! manipulation. All transcendental calls go through [`cis_frac`], which takes
//! a phase already reduced to `[0,1)` in rational arithmetic.

mod charsum;
mod rational;
mod special;
mod walsh;

pub use charsum::prime_power_phase_sum;
pub use rational::{DigitVector, Rational01};
pub use special::{bernoulli_poly, check_prime_base, floor_log, is_prime, mu, zeta};
pub use walsh::{
    cis_frac, digit_add, digit_sub, frac_dot, index_digit_add, index_digit_sub, trig_multi,
    walsh_1d, walsh_multi, walsh_phase, walsh_phase_multi,
};

pub type Complex = num_complex::Complex64;
