//! Chain coalgebras, free chain algebras, Hopf algebras and comodules
//! presented by generators, with model builders and a JSON document format.

mod algebra;
mod coalgebra;
mod document;
mod words;

pub use algebra::{
    verify_coaction, verify_hopf, Comodule, FreeAlgebra, HopfAlgebra, HopfAsCoalgebra, HopfCheck,
    PresentedHopf, RegularComodule, Side, TensorAlgebraDga, TrivialComodule,
};
pub use coalgebra::{
    basis_table, direct_sum, reassoc_left, reassoc_right, sphere_model, tensor_coalgebra,
    tensor_differential, tensor_map, trivial_coalgebra, verify_coalgebra, Coalgebra,
    CoalgebraCheck, DgCoalgebra,
};
pub use document::{load_document, write_document, CoalgebraDocument, DocumentError};
pub use words::{
    concat, derivation_extend, derivation_extend_with, enumerate_words, multiplicative_extend,
    split2, Multiplication, TensorProduct, Words,
};
