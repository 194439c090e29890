//! Closed-form double-loop model of a formal coalgebra with primitive
//! generators: bracket bases, the transported differential and the mod-2
//! polynomial prediction.

mod bracket;
mod model;
mod predict;

pub use bracket::{bracket_basis, commutator, expand_bracket, expand_word};
pub use model::{formal_dl, FormalDlModel};
pub use predict::{mod2_predicted_generators, predicted_betti, PredictedGenerator};
