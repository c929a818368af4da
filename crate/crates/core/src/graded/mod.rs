//! Multigraded rings: presentations, Hilbert functions, equivalence.

mod count;
mod equivalence;
mod groebner;
mod presentation;

pub use count::{ci_hilbert, count_monomials, MonomialCounter};
pub use equivalence::{presentation_equivalent, Equivalence};
pub use groebner::{standard_monomial_count, DEFAULT_SPAIR_CAP};
pub use presentation::{GradedPresentation, HomogeneityReport, Relation, RelationCheck};
