//! Theta constants and the discriminant modular form on the Siegel upper
//! half space.

pub mod lemmas;
pub mod matrix;
pub mod point;
pub mod reduce;
pub mod symplectic;
pub mod theta;

pub use lemmas::{lemfg_k1, minkowski_k2, verify_lemfg, verify_lemma_transform};
pub use matrix::{CMatrix, IMatrix};
pub use point::SiegelPoint;
pub use reduce::reduce_to_fundamental;
pub use symplectic::SymplecticMatrix;
pub use theta::{
    delta_characteristics, delta_g, mumford_characteristics, sigma_delta_g, theta_constant,
    ThetaCharacteristic,
};
