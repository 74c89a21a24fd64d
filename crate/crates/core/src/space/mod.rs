//! The weighted tensor-product function space: per-coordinate weight
//! sequences, the reproducing kernel in closed form, and finitely supported
//! elements of the space.

mod coeffs;
mod kernel;
mod params;
mod weights;

pub use coeffs::{random_test_function, CoeffFunction};
#[cfg(test)]
pub(crate) use coeffs::modulate;
pub use kernel::{
    kernel_1d_korobov, kernel_1d_walsh, kernel_1d_walsh_diff, kernel_diag, kernel_eval,
    weight_product,
};
pub(crate) use kernel::{korobov_factor, r_1d, rho_block, walsh_factor_from_first_digit};
pub use params::{HybridIndex, SpaceParams};
pub use weights::{WeightFamily, WeightSpec};
