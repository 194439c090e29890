//! Cobar constructions, one-sided cobar constructions with twisted
//! differentials, their twisted products, and Cotor.

mod cobar;
mod cotor;
mod one_sided;
mod twisted;

pub use crate::cobar::{cobar, desusp, extended_cobar, quadratic_part, undesusp, Cobar};
pub use cotor::{cotor, AlgebraOnHomology};
pub use one_sided::{one_sided_cobar, unchecked_one_sided, TwistedTensor};
pub use twisted::{leibniz_residue, GroundRing, LeftTwisted, RightTwisted};
