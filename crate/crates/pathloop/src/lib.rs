//! Based-path objects, the path-loop construction `𝔓𝔏`, the maps `κ`,
//! `𝔰`, `𝔥` and the lift `θ̃`, cofixed-point extraction, and the
//! double-loop and loop-fiber models.

mod cofixed;
mod lift;
mod models;
mod path;
mod pathloop;

pub use cofixed::{cofixed_subalgebra, Cofixed};
pub use lift::{identity_model, lift_theta, Lift, LiftCheck, SectionCheck};
pub use models::{
    diagonal_failures, double_loop, loop_fiber, verify_cofreeness, weighted_betti, CofixedModel,
    CofreenessCheck, LoopFiber,
};
pub use path::{extend_psi, path_object, sigma_derivation};
pub use pathloop::{is_barred_letter, path_loop, KappaCheck, PathLoop};
