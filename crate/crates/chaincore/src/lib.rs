//! Exact coefficient rings, labelled graded modules, chain complexes and
//! homology over a principal ideal domain, all truncated at a degree cutoff.

mod complex;
mod element;
mod error;
mod label;
pub mod matrix;
mod ring;
mod span;

pub use complex::{
    homology, kernel_basis, kernel_of, verify_differential, ChainComplex, DifferentialCheck,
    GradedBasis, HomologyGroup, HomologyTable, LinearMap,
};
pub use element::Element;
pub use error::{Error, Result};
pub use label::Label;
pub use matrix::{smith_normal_form, Matrix, Snf};
pub use num_bigint::BigInt;
pub use ring::{is_prime, sign, Ring};
pub use span::{convolve, tensor_complex, Span};
