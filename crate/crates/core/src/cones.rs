//! Rational polyhedral cones via double description.
//!
//! A cone is stored canonically: a basis of its lineality space in reduced
//! echelon form (rows made primitive) and its extremal rays projected onto the
//! orthogonal complement of the lineality space, primitive and sorted. Two
//! cones are equal iff their stored data is equal.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::intlin::{rational_rank, rational_solve, ClassVector, GramForm};
use crate::{Error, Result};

/// Largest ambient dimension the cone routines accept.
pub const MAX_DIM: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cone {
    dim: usize,
    rays: Vec<ClassVector>,
    lineality: Vec<ClassVector>,
}

impl Cone {
    /// The cone `{0}` in dimension `dim`.
    pub fn zero(dim: usize) -> Self {
        Cone { dim, rays: Vec::new(), lineality: Vec::new() }
    }

    /// The smallest cone containing `vectors`.
    pub fn positive_hull(dim: usize, vectors: &[ClassVector]) -> Result<Self> {
        check_dim(dim)?;
        for v in vectors {
            if v.dim() != dim {
                return Err(Error::Shape(alloc::format!("vector {v} in ambient dimension {dim}")));
            }
        }
        let (dual_rays, dual_lin) = double_description(dim, vectors);
        let mut ineqs = dual_rays;
        for l in dual_lin {
            ineqs.push(-&l);
            ineqs.push(l);
        }
        let (rays, lin) = double_description(dim, &ineqs);
        Ok(canonical(dim, rays, lin))
    }

    /// `{x : a . x >= 0 for all a}`.
    pub fn from_inequalities(dim: usize, ineqs: &[ClassVector]) -> Result<Self> {
        check_dim(dim)?;
        let (rays, lin) = double_description(dim, ineqs);
        Ok(canonical(dim, rays, lin))
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Extremal rays modulo the lineality space.
    pub fn rays(&self) -> &[ClassVector] {
        &self.rays
    }

    pub fn lineality(&self) -> &[ClassVector] {
        &self.lineality
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    /// A generating set: the rays together with `+-l` for each lineality vector, sorted.
    pub fn generators(&self) -> Vec<ClassVector> {
        let mut g = self.rays.clone();
        for l in &self.lineality {
            g.push(l.clone());
            g.push(-l);
        }
        g.sort();
        g
    }

    /// Dimension of the linear span.
    pub fn span_dim(&self) -> usize {
        let rows: Vec<Vec<BigRational>> = self.generators().iter().map(ClassVector::to_rational).collect();
        rational_rank(&rows)
    }

    /// The dual cone `{y : y . x >= 0 for all x in self}`.
    pub fn dual(&self) -> Cone {
        let (rays, lin) = double_description(self.dim, &self.generators());
        canonical(self.dim, rays, lin)
    }

    pub fn contains(&self, x: &ClassVector) -> bool {
        let d = self.dual();
        d.rays.iter().all(|r| !r.dot(x).is_negative()) && d.lineality.iter().all(|l| l.dot(x).is_zero())
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.generators().iter().all(|g| self.contains(g))
    }

    pub fn intersect(&self, other: &Cone) -> Result<Cone> {
        if self.dim != other.dim {
            return Err(Error::Shape(alloc::format!("cones of dimension {} and {}", self.dim, other.dim)));
        }
        let mut ineqs = self.dual().generators();
        ineqs.extend(other.dual().generators());
        let (rays, lin) = double_description(self.dim, &ineqs);
        Ok(canonical(self.dim, rays, lin))
    }

    /// `{x : x^T G g >= 0 for every g in self}`.
    pub fn dual_under_form(&self, g: &GramForm) -> Result<Cone> {
        if g.rank() != self.dim {
            return Err(Error::Shape(alloc::format!("form of rank {} on cone of dimension {}", g.rank(), self.dim)));
        }
        if g.determinant().is_zero() {
            return Err(Error::Degenerate);
        }
        let images: Vec<ClassVector> = self.generators().iter().map(|v| g.gram().mul_vec(v)).collect();
        let (rays, lin) = double_description(self.dim, &images);
        Ok(canonical(self.dim, rays, lin))
    }
}

/// `Mov = intersection over i of cone(d_j : j != i)`.
pub fn moving_cone(dim: usize, degrees: &[ClassVector]) -> Result<Cone> {
    check_dim(dim)?;
    let mut acc: Option<Cone> = None;
    for i in 0..degrees.len() {
        let rest: Vec<ClassVector> =
            degrees.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, d)| d.clone()).collect();
        let c = Cone::positive_hull(dim, &rest)?;
        acc = Some(match acc {
            None => c,
            Some(a) => a.intersect(&c)?,
        });
    }
    acc.ok_or_else(|| Error::Shape(alloc::string::String::from("moving cone of an empty degree list")))
}

/// A linear form strictly positive on every nonzero vector of the listed
/// ones, if their hull is pointed and none is zero.
pub fn positive_functional(dim: usize, vectors: &[ClassVector]) -> Result<Option<ClassVector>> {
    if vectors.iter().any(ClassVector::is_zero) {
        return Ok(None);
    }
    let c = Cone::positive_hull(dim, vectors)?;
    if !c.is_pointed() {
        return Ok(None);
    }
    // the sum of the rays of the dual is positive on the pointed cone minus 0
    let d = c.dual();
    let mut phi = ClassVector::zero(dim);
    for r in d.rays() {
        phi = &phi + r;
    }
    if phi.is_zero() && !vectors.is_empty() {
        return Ok(None);
    }
    debug_assert!(vectors.iter().all(|v| phi.dot(v).is_positive()));
    Ok(Some(phi))
}

fn check_dim(dim: usize) -> Result<()> {
    if dim > MAX_DIM {
        return Err(Error::DimensionTooLarge(dim, MAX_DIM));
    }
    Ok(())
}

/// Generators `(rays, lineality)` of `{x in Q^dim : a . x >= 0}`.
fn double_description(dim: usize, ineqs: &[ClassVector]) -> (Vec<ClassVector>, Vec<ClassVector>) {
    let mut lin: Vec<ClassVector> = (0..dim).map(|i| ClassVector::unit(dim, i)).collect();
    let mut rays: Vec<ClassVector> = Vec::new();
    let mut seen: Vec<&ClassVector> = Vec::new();

    for a in ineqs {
        if a.is_zero() {
            continue;
        }
        seen.push(a);
        if let Some(k) = lin.iter().position(|l| !a.dot(l).is_zero()) {
            let mut l0 = lin.swap_remove(k);
            if a.dot(&l0).is_negative() {
                l0 = -&l0;
            }
            let al0 = a.dot(&l0);
            let project = |v: &ClassVector| (&v.scale(&al0) - &l0.scale(&a.dot(v))).primitive();
            lin = lin.iter().map(project).collect();
            rays = rays.iter().map(project).collect();
            rays.push(l0.primitive());
            continue;
        }
        let (mut pos, mut zero, mut neg) = (Vec::new(), Vec::new(), Vec::new());
        for r in rays {
            match a.dot(&r).sign() {
                num_bigint::Sign::Plus => pos.push(r),
                num_bigint::Sign::NoSign => zero.push(r),
                num_bigint::Sign::Minus => neg.push(r),
            }
        }
        let mut next = pos.clone();
        next.extend(zero);
        for p in &pos {
            for n in &neg {
                let c = &n.scale(&a.dot(p)) - &p.scale(&a.dot(n));
                next.push(c.primitive());
            }
        }
        next.sort();
        next.dedup();
        // keep the extremal ones: tight constraints of rank dim - dim(lin) - 1
        let want = dim - lin.len() - 1;
        rays = next
            .into_iter()
            .filter(|r| {
                let tight: Vec<Vec<BigRational>> =
                    seen.iter().filter(|b| b.dot(r).is_zero()).map(|b| b.to_rational()).collect();
                rational_rank(&tight) == want
            })
            .collect();
    }
    (rays, lin)
}

fn canonical(dim: usize, rays: Vec<ClassVector>, lin: Vec<ClassVector>) -> Cone {
    let lineality = echelon_basis(dim, &lin);
    let mut rays: Vec<ClassVector> =
        rays.iter().map(|r| project_off(r, &lineality)).filter(|r| !r.is_zero()).map(|r| r.primitive()).collect();
    rays.sort();
    rays.dedup();
    Cone { dim, rays, lineality }
}

/// Reduced row echelon basis of the span, each row scaled to a primitive
/// integer vector with positive leading entry.
fn echelon_basis(dim: usize, vs: &[ClassVector]) -> Vec<ClassVector> {
    let mut m: Vec<Vec<BigRational>> = vs.iter().map(ClassVector::to_rational).collect();
    let mut r = 0;
    for c in 0..dim {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let piv = m[r][c].clone();
        for k in 0..dim {
            let v = &m[r][k] / &piv;
            m[r][k] = v;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in 0..dim {
                    let v = &f * &m[r][k];
                    m[i][k] -= v;
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    m.iter().map(|row| integral(row)).collect()
}

/// Clears denominators and divides by the content.
fn integral(row: &[BigRational]) -> ClassVector {
    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    ClassVector(row.iter().map(|x| x.numer() * (&l / x.denom())).collect()).primitive()
}

/// Orthogonal projection onto the complement of `span(basis)`, rescaled to an integer vector.
fn project_off(v: &ClassVector, basis: &[ClassVector]) -> ClassVector {
    if basis.is_empty() {
        return v.clone();
    }
    let gram: Vec<Vec<BigRational>> =
        basis.iter().map(|a| basis.iter().map(|b| BigRational::from_integer(a.dot(b))).collect()).collect();
    let rhs: Vec<BigRational> = basis.iter().map(|a| BigRational::from_integer(a.dot(v))).collect();
    let c = rational_solve(&gram, &rhs).expect("echelon basis is independent");
    let mut out: Vec<BigRational> = v.to_rational();
    for (ci, b) in c.iter().zip(basis) {
        for (o, bj) in out.iter_mut().zip(b.iter()) {
            *o -= ci * BigRational::from_integer(bj.clone());
        }
    }
    integral(&out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> ClassVector {
        ClassVector::from_i64s(xs)
    }

    fn hull(vs: &[&[i64]]) -> Cone {
        let vs: Vec<ClassVector> = vs.iter().map(|x| v(x)).collect();
        Cone::positive_hull(vs[0].dim(), &vs).unwrap()
    }

    #[test]
    fn hull_examples() {
        assert_eq!(hull(&[&[1, 0], &[0, 1], &[1, 1]]).rays(), [v(&[0, 1]), v(&[1, 0])]);
        assert_eq!(hull(&[&[2, 2]]).rays(), [v(&[1, 1])]);
        let half = hull(&[&[1, 0], &[-1, 0], &[0, 1]]);
        assert!(!half.is_pointed());
        assert_eq!(half.lineality(), [v(&[1, 0])]);
        assert_eq!(half.rays(), [v(&[0, 1])]);
        assert_eq!(half.generators(), [v(&[-1, 0]), v(&[0, 1]), v(&[1, 0])]);
    }

    #[test]
    fn whole_space_and_zero() {
        let all = hull(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        assert_eq!(all.lineality().len(), 2);
        assert!(all.rays().is_empty());
        assert!(Cone::positive_hull(2, &[]).unwrap().is_zero());
        assert!(hull(&[&[0, 0]]).is_zero());
    }

    #[test]
    fn three_dimensional_hull() {
        // square pyramid: the apex direction (1,1,2)/2 is interior
        let c = hull(&[&[1, 0, 1], &[0, 1, 1], &[-1, 0, 1], &[0, -1, 1], &[0, 0, 1]]);
        assert_eq!(c.rays().len(), 4);
        assert!(c.contains(&v(&[0, 0, 1])));
        assert!(!c.contains(&v(&[1, 1, 1])));
    }

    #[test]
    fn intersections() {
        let quadrant = hull(&[&[1, 0], &[0, 1]]);
        let wedge = hull(&[&[1, 1], &[1, -1]]);
        assert_eq!(quadrant.intersect(&wedge).unwrap(), hull(&[&[1, 1], &[1, 0]]));
        assert_eq!(quadrant.intersect(&quadrant).unwrap(), quadrant);
        assert!(hull(&[&[1, 0]]).intersect(&hull(&[&[0, 1]])).unwrap().is_zero());
        assert!(quadrant.intersect(&Cone::zero(3)).is_err());
    }

    #[test]
    fn moving_cones() {
        let q = moving_cone(2, &[v(&[1, 0]), v(&[0, 1]), v(&[1, 0]), v(&[0, 1])]).unwrap();
        assert_eq!(q, hull(&[&[1, 0], &[0, 1]]));
        let r = moving_cone(2, &[v(&[1, 0]), v(&[1, 0]), v(&[0, 1])]).unwrap();
        assert_eq!(r, hull(&[&[1, 0]]));
        assert!(moving_cone(2, &[v(&[1, 0])]).unwrap().is_zero());
    }

    #[test]
    fn duals_under_forms() {
        let eff = hull(&[&[1, 0], &[0, 1]]);
        for k in 3..=8 {
            let g = GramForm::from_i64_rows(&[[-2, k], [k, 0]]).unwrap();
            assert_eq!(eff.dual_under_form(&g).unwrap(), hull(&[&[k, 2], &[0, 1]]));
            let g = GramForm::from_i64_rows(&[[-2, k], [k, -2]]).unwrap();
            assert_eq!(eff.dual_under_form(&g).unwrap(), hull(&[&[k, 2], &[2, k]]));
        }
        let g = GramForm::from_i64_rows(&[[0, 3], [3, 0]]).unwrap();
        assert_eq!(eff.dual_under_form(&g).unwrap(), eff);
        let degenerate = GramForm::from_i64_rows(&[[1, 1], [1, 1]]).unwrap();
        assert_eq!(eff.dual_under_form(&degenerate), Err(Error::Degenerate));
    }

    #[test]
    fn dimension_cap() {
        assert_eq!(Cone::positive_hull(6, &[]), Err(Error::DimensionTooLarge(6, 5)));
    }

    #[test]
    fn functional() {
        let phi = positive_functional(2, &[v(&[1, 0]), v(&[1, 1]), v(&[1, -1])]).unwrap().unwrap();
        assert!(phi.dot(&v(&[1, -1])).is_positive());
        assert!(positive_functional(2, &[v(&[1, 0]), v(&[-1, 0])]).unwrap().is_none());
        assert!(positive_functional(2, &[v(&[1, 0]), v(&[0, 0])]).unwrap().is_none());
    }
}
