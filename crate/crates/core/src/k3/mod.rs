//! Cox rings of K3 surfaces: rank-two predictions, double covers of rational
//! surfaces, and lattice data for non-symplectic involutions.

use alloc::string::String;
use alloc::vec::Vec;

use crate::intlin::ClassVector;

mod cover;
mod delpezzo;
mod rank2;
mod table;

pub use cover::{adjoin_cover, Branch, CoverSpec};
pub use delpezzo::{
    canonical_class as delpezzo_canonical, delpezzo_curves, delpezzo_form, predict_delpezzo_cover, CurveKind, Curves,
};
pub use rank2::{
    eff_cone_rank2, h0_rank2, nef_cone_rank2, polyhedral_rank2, predict_rank2, Polyhedrality, RankTwoScenario,
};
pub use table::{branch_genus, classification_table, nikulin_counts, TableRow};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Completeness {
    /// The degrees are those of a minimal presentation.
    Exact,
    /// Generators are known to exist in these degrees; there may be more.
    LowerBound,
}

/// Degrees of a predicted Cox ring presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredictionResult {
    pub generator_degrees: Vec<ClassVector>,
    pub relation_degrees: Vec<ClassVector>,
    pub completeness: Completeness,
    /// Which case of the prediction applied.
    pub case: String,
}

impl PredictionResult {
    pub fn new(
        generator_degrees: Vec<ClassVector>,
        relation_degrees: Vec<ClassVector>,
        completeness: Completeness,
        case: &str,
    ) -> Self {
        PredictionResult { generator_degrees, relation_degrees, completeness, case: case.into() }
    }
}
