//! Strongly-homotopy coalgebra families and the structures built from them:
//! the induction functor into chain algebras, Milgram's equivalence and
//! Alexander-Whitney coalgebras with their induced Hopf diagonals.

mod aw;
mod family;
mod milgram;
mod shmap;

pub use aw::{
    aw_coproduct, classify, induced_diagonal, verify_diagonal, AwCoalgebra, InducedHopf, Membership,
};
pub use family::{
    coherence_residue, desuspension_sign, solve_family, verify_sh_family, ShCheck, ShFamily,
};
pub use milgram::{
    milgram_apply, milgram_letter, milgram_q, tensor_cobar_differential, tensor_of_words, Milgram,
};
pub use shmap::{load_shmap, ShmapDocument};
