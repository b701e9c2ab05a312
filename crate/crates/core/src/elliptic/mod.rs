//! Elliptic curves over Q.

pub mod checks;
pub mod frey;
pub mod global;
pub mod lambda;
pub mod model;
pub mod periods;
pub mod tate;

pub use checks::{genus_one_checks, GenusOneData};
pub use frey::{frey_curve, support_radical};
pub use global::{global_invariants, global_invariants_with_cap, GlobalInvariants};
pub use lambda::{lambda_data, LambdaData};
pub use model::EllipticModel;
pub use periods::{faltings_height, FaltingsHeightResult};
pub use tate::{tate_local, Kodaira, LocalReductionData};
