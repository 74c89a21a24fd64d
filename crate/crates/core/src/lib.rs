//! Weighted hybrid function spaces built from digital (Walsh) and periodic
//! (Korobov) coordinate structures: reproducing kernels with closed-form
//! factors, lattice and polynomial-lattice QMC node sets with a greedy
//! component-by-component search, spectral truncation sets and information
//! complexity, and the truncated-spectrum QMC approximation algorithm with
//! its exact error decomposition and a-priori bound.
//!
//! Everything that decides exactness (digit expansions, node coordinates,
//! character phases) runs in exact rational/integer arithmetic; floating
//! point only enters for kernel values, eigenvalues and error norms.

pub mod arith;
pub mod approx;
pub mod error;
pub mod fbpoly;
pub mod pointsets;
pub mod space;
pub mod spectrum;

pub use arith::{Complex, Rational01};
pub use error::{Error, Result};
pub use space::{CoeffFunction, HybridIndex, SpaceParams, WeightFamily, WeightSpec};
