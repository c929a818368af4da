//! Exact integer linear algebra.

mod binary;
mod form;
mod lattice;
mod matrix;
mod smith;

pub use binary::{represents, Certificate, Representation};
pub use form::{GramForm, TwoElementaryInvariants};
pub use lattice::{
    gale_dual, is_surjective, kernel_lattice, right_inverse, unimodular_row_equivalent, unimodular_transform,
};
pub use matrix::{rational_inverse, rational_rank, rational_solve, sum_vectors, ClassVector, IntMatrix};
pub use smith::{hermite_normal_form, smith_normal_form, SmithDecomposition};
