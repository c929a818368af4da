//! Cox rings of double covers `X -> Y` branched along `B ~ -2K_Y`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::graded::{GradedPresentation, MonomialCounter, Relation};
use crate::intlin::{smith_normal_form, ClassVector, IntMatrix};
use crate::toric::LaurentPolynomial;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Branch {
    /// `B` is a single smooth curve.
    Irreducible,
    /// `B = C1 + C_B` with `C1` a smooth rational curve of the given class,
    /// which must be the degree of a generator of the base ring.
    RationalComponent(ClassVector),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSpec {
    pub base: GradedPresentation,
    pub base_canonical: ClassVector,
    pub branch: Branch,
}

impl CoverSpec {
    /// Reads the canonical class off a complete intersection base ring.
    pub fn from_complete_intersection(base: GradedPresentation, branch: Branch) -> Result<Self> {
        let base_canonical = base.canonical_class()?;
        Ok(CoverSpec { base, base_canonical, branch })
    }
}

/// The Cox ring of the cover, in a basis of `Cl(X)`.
///
/// With an irreducible branch curve, `Cl(X) = Cl(Y)` and a root `T` of the
/// branch section is adjoined in degree `-K_Y`. With a rational component
/// `C1` of class `w1`, the basis is first changed so that `w1 = e1`; the
/// pull-back then acts as `diag(2, 1, ..., 1)`, the generator of `C1` gets
/// degree `e1` and the root of the residual branch curve gets degree
/// `-A(2K_Y + w1)/2`.
pub fn adjoin_cover(spec: &CoverSpec) -> Result<GradedPresentation> {
    let base = &spec.base;
    let r = base.grading_rank();
    let k = &spec.base_canonical;
    if k.dim() != r {
        return Err(Error::Shape(format!("canonical class {k} in a grading group of rank {r}")));
    }
    let branch = k.scale(&BigInt::from(-2));
    let mut counter = MonomialCounter::new(base.q())?;
    if counter.count(&branch).is_zero() {
        return Err(Error::NotEffective(format!("branch class {branch}")));
    }
    let n = base.num_generators();
    let root = format!("T{}", n + 1);

    match &spec.branch {
        Branch::Irreducible => {
            let q = base.q().with_column(&-k)?;
            let mut relations: Vec<Relation> = base.relations().iter().map(|rel| extend(rel, 1)).collect();
            relations.push(Relation::generic(branch, format!("{root}^2 - f")));
            GradedPresentation::new(q, relations)
        }
        Branch::RationalComponent(w1) => {
            let degrees = base.generator_degrees();
            let c = degrees
                .iter()
                .position(|d| d == w1)
                .ok_or_else(|| Error::Inconsistent(format!("no generator of degree {w1}")))?;
            let u = normalizing_basis(w1)?;
            let mut a = IntMatrix::identity(r);
            a[(0, 0)] = BigInt::from(2);
            let m = &a * &u;
            let e1 = ClassVector::unit(r, 0);

            let mut cols: Vec<ClassVector> =
                degrees.iter().enumerate().map(|(i, d)| if i == c { e1.clone() } else { m.mul_vec(d) }).collect();
            let twice = -&m.mul_vec(&(&k.scale(&BigInt::from(2)) + w1));
            let t = twice.div_exact(&BigInt::from(2)).ok_or_else(|| {
                Error::Inconsistent(format!("degree {twice} / 2 of the new generator is not integral"))
            })?;
            cols.push(t.clone());
            let q = IntMatrix::from_columns(r, &cols)?;

            let mut relations: Vec<Relation> = base
                .relations()
                .iter()
                .map(|rel| match rel {
                    Relation::Explicit(p) => Relation::Explicit(square_variable(p, c).extend_vars(1)),
                    Relation::Generic { degree, label } => Relation::generic(m.mul_vec(degree), label.clone()),
                })
                .collect();
            let others: Vec<String> =
                (0..n).map(|i| if i == c { format!("T{}^2", i + 1) } else { format!("T{}", i + 1) }).collect();
            relations.push(Relation::generic(
                t.scale(&BigInt::from(2)),
                format!("{root}^2 - f, f in C[{}]", others.join(", ")),
            ));
            GradedPresentation::new(q, relations)
        }
    }
}

fn extend(rel: &Relation, k: usize) -> Relation {
    match rel {
        Relation::Explicit(p) => Relation::Explicit(p.extend_vars(k)),
        generic => generic.clone(),
    }
}

/// `p(T_1, ..., T_c^2, ..., T_n)`
fn square_variable(p: &LaurentPolynomial, c: usize) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(
        p.nvars(),
        p.terms().map(|(e, x)| {
            let mut e = e.clone();
            e[c] *= 2;
            (x.clone(), e)
        }),
    )
}

/// A unimodular `u` with `u w = e1`.
fn normalizing_basis(w: &ClassVector) -> Result<IntMatrix> {
    if !w.is_primitive() {
        return Err(Error::NotPrimitive(format!("{w}")));
    }
    let s = smith_normal_form(&IntMatrix::from_columns(w.dim(), core::slice::from_ref(w))?);
    let image = s.u.mul_vec(w);
    let sign = &image[0];
    debug_assert!(sign.abs().is_one() && image.iter().skip(1).all(Zero::is_zero));
    Ok(if sign.is_negative() { -&s.u } else { s.u })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m<const C: usize>(rows: &[[i64; C]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows)
    }

    #[test]
    fn one_component_over_f0() {
        let base = GradedPresentation::polynomial_ring(m(&[[1, 0, 1, 0], [0, 1, 0, 1]]));
        let spec = CoverSpec::from_complete_intersection(base, Branch::Irreducible).unwrap();
        let x = adjoin_cover(&spec).unwrap();
        assert_eq!(x.q(), &m(&[[1, 0, 1, 0, 2], [0, 1, 0, 1, 2]]));
        assert_eq!(x.relation_degrees().unwrap(), vec![ClassVector::from_i64s(&[4, 4])]);
        assert!(x.canonical_class().unwrap().is_zero());
    }

    #[test]
    fn two_components_over_f4() {
        // T1 spans the negative section
        let base = GradedPresentation::polynomial_ring(m(&[[1, 0, 1, 0], [0, 1, 4, 1]]));
        let spec =
            CoverSpec::from_complete_intersection(base, Branch::RationalComponent(ClassVector::from_i64s(&[1, 0])))
                .unwrap();
        let x = adjoin_cover(&spec).unwrap();
        assert_eq!(x.q(), &m(&[[1, 0, 2, 0, 3], [0, 1, 4, 1, 6]]));
        assert!(x.canonical_class().unwrap().is_zero());
        assert!(matches!(&x.relations()[0], Relation::Generic { label, .. } if label.contains("T1^2")));
    }

    #[test]
    fn explicit_relations_are_carried() {
        let q = m(&[[1, 0, 1, 0, 1], [0, 1, 0, 1, 1]]);
        let f = LaurentPolynomial::parse("T1*T2 - T3*T4", 5).unwrap();
        let base = GradedPresentation::new(q, vec![Relation::Explicit(f)]).unwrap();
        let spec = CoverSpec::from_complete_intersection(base.clone(), Branch::Irreducible).unwrap();
        let x = adjoin_cover(&spec).unwrap();
        assert_eq!(x.num_generators(), 6);
        assert!(x.homogeneity_check().passed());

        let spec =
            CoverSpec::from_complete_intersection(base, Branch::RationalComponent(ClassVector::from_i64s(&[1, 0])))
                .unwrap();
        let x = adjoin_cover(&spec).unwrap();
        assert!(x.homogeneity_check().passed());
        assert_eq!(x.relations()[0], Relation::Explicit(LaurentPolynomial::parse("T1^2*T2 - T3*T4", 6).unwrap()));
    }

    #[test]
    fn errors() {
        let base = GradedPresentation::polynomial_ring(m(&[[1, 0, 1, 0], [0, 1, 0, 1]]));
        let bad = CoverSpec {
            base: base.clone(),
            base_canonical: ClassVector::from_i64s(&[1, 1]),
            branch: Branch::Irreducible,
        };
        assert!(matches!(adjoin_cover(&bad), Err(Error::NotEffective(_))));
        let missing =
            CoverSpec::from_complete_intersection(base, Branch::RationalComponent(ClassVector::from_i64s(&[1, 1])))
                .unwrap();
        assert!(matches!(adjoin_cover(&missing), Err(Error::Inconsistent(_))));
    }
}
