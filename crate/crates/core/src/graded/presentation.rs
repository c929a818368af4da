use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::intlin::{ClassVector, IntMatrix};
use crate::toric::LaurentPolynomial;
use crate::{Error, Result};

/// A relation of a graded presentation: an explicit polynomial, or a generic
/// one of which only the degree is known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Relation {
    Explicit(LaurentPolynomial),
    Generic { degree: ClassVector, label: String },
}

impl Relation {
    pub fn generic(degree: ClassVector, label: impl Into<String>) -> Self {
        Relation::Generic { degree, label: label.into() }
    }

    pub fn is_generic(&self) -> bool {
        matches!(self, Relation::Generic { .. })
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Explicit(p) => write!(f, "{p}"),
            Relation::Generic { degree, label } => write!(f, "{label} (degree {degree})"),
        }
    }
}

/// `C[T_1..T_n] / <relations>` graded by the columns of `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPresentation {
    q: IntMatrix,
    relations: Vec<Relation>,
}

/// The distinct term degrees of one explicit relation, in term order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub index: usize,
    pub homogeneous: bool,
    pub term_degrees: Vec<ClassVector>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneityReport {
    pub relations: Vec<RelationCheck>,
}

impl HomogeneityReport {
    pub fn passed(&self) -> bool {
        self.relations.iter().all(|r| r.homogeneous)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.relations.iter().filter(|r| !r.homogeneous)
    }
}

impl GradedPresentation {
    pub fn new(q: IntMatrix, relations: Vec<Relation>) -> Result<Self> {
        for (i, r) in relations.iter().enumerate() {
            match r {
                Relation::Explicit(p) if p.nvars() != q.cols() => {
                    return Err(Error::Shape(format!(
                        "relation {} has {} variables, the grading has {} generators",
                        i + 1,
                        p.nvars(),
                        q.cols()
                    )));
                }
                Relation::Explicit(p) if !p.is_polynomial() => {
                    return Err(Error::OutOfRange(format!("relation {} has negative exponents", i + 1)));
                }
                Relation::Generic { degree, .. } if degree.dim() != q.rows() => {
                    return Err(Error::Shape(format!("degree of relation {} has the wrong length", i + 1)));
                }
                _ => {}
            }
        }
        Ok(GradedPresentation { q, relations })
    }

    pub fn polynomial_ring(q: IntMatrix) -> Self {
        GradedPresentation { q, relations: Vec::new() }
    }

    pub fn q(&self) -> &IntMatrix {
        &self.q
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn num_generators(&self) -> usize {
        self.q.cols()
    }

    pub fn grading_rank(&self) -> usize {
        self.q.rows()
    }

    pub fn generator_degrees(&self) -> Vec<ClassVector> {
        self.q.columns()
    }

    pub fn has_generic_relations(&self) -> bool {
        self.relations.iter().any(Relation::is_generic)
    }

    /// Degree of every relation; errors on the first inhomogeneous one.
    pub fn relation_degrees(&self) -> Result<Vec<ClassVector>> {
        self.relations
            .iter()
            .enumerate()
            .map(|(i, r)| match r {
                Relation::Generic { degree, .. } => Ok(degree.clone()),
                Relation::Explicit(p) => p.degree(&self.q)?.ok_or(Error::Inhomogeneous(i + 1)),
            })
            .collect()
    }

    pub fn homogeneity_check(&self) -> HomogeneityReport {
        let relations = self
            .relations
            .iter()
            .enumerate()
            .filter_map(|(index, r)| match r {
                Relation::Explicit(p) => {
                    let mut term_degrees: Vec<ClassVector> = Vec::new();
                    for d in p.term_degrees(&self.q).ok()? {
                        if !term_degrees.contains(&d) {
                            term_degrees.push(d);
                        }
                    }
                    Some(RelationCheck { index, homogeneous: term_degrees.len() <= 1, term_degrees })
                }
                Relation::Generic { .. } => None,
            })
            .collect();
        HomogeneityReport { relations }
    }

    /// `#relations = #generators - 2 - rank`, the codimension of the total
    /// coordinate space of a surface. A polynomial ring always qualifies.
    pub fn is_complete_intersection(&self) -> bool {
        self.relations.is_empty()
            || self.num_generators().checked_sub(2 + self.grading_rank()) == Some(self.relations.len())
    }

    /// `sum deg(relations) - sum deg(generators)`.
    pub fn canonical_class(&self) -> Result<ClassVector> {
        if !self.is_complete_intersection() {
            return Err(Error::NotCompleteIntersection(format!(
                "{} generators, grading rank {}, {} relations",
                self.num_generators(),
                self.grading_rank(),
                self.relations.len()
            )));
        }
        let mut k = ClassVector::zero(self.grading_rank());
        for d in self.relation_degrees()? {
            k = &k + &d;
        }
        for c in self.q.columns() {
            k = &k - &c;
        }
        Ok(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rho2i() -> GradedPresentation {
        let q = IntMatrix::from_i64_rows(&[[1, 0, 1, 0, 2], [0, 1, 0, 1, 2]]);
        GradedPresentation::new(q, alloc::vec![Relation::generic(ClassVector::from_i64s(&[4, 4]), "T5^2 - f")]).unwrap()
    }

    #[test]
    fn canonical_classes() {
        let f0 = GradedPresentation::polynomial_ring(IntMatrix::from_i64_rows(&[[1, 0, 1, 0], [0, 1, 0, 1]]));
        assert_eq!(f0.canonical_class().unwrap(), ClassVector::from_i64s(&[-2, -2]));
        assert!(rho2i().canonical_class().unwrap().is_zero());
    }

    #[test]
    fn homogeneity() {
        let q = IntMatrix::from_i64_rows(&[[1, 1, 2]]);
        let good = LaurentPolynomial::parse("T1*T2 - T3", 3).unwrap();
        let bad = LaurentPolynomial::parse("T1 - T3", 3).unwrap();
        let p = GradedPresentation::new(q, alloc::vec![Relation::Explicit(good), Relation::Explicit(bad)]).unwrap();
        let r = p.homogeneity_check();
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
        assert_eq!(p.relation_degrees(), Err(Error::Inhomogeneous(2)));
    }

    #[test]
    fn shape_errors() {
        let q = IntMatrix::from_i64_rows(&[[1, 1]]);
        let p = LaurentPolynomial::parse("T3", 3).unwrap();
        assert!(GradedPresentation::new(q, alloc::vec![Relation::Explicit(p)]).is_err());
    }
}
