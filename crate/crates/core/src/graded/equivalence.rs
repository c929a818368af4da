use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::GradedPresentation;
use crate::intlin::{rational_inverse, rational_rank, ClassVector, IntMatrix};
use crate::Result;

/// A basis change `u` of the grading group and a matching of generators:
/// `u * deg_1(T_i) = deg_2(T_{perm[i]})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equivalence {
    pub u: IntMatrix,
    pub permutation: Vec<usize>,
}

/// Decides whether two presentations agree up to a unimodular change of the
/// grading basis and a relabelling of generators, with relation degree
/// multisets corresponding under the same basis change.
pub fn presentation_equivalent(p1: &GradedPresentation, p2: &GradedPresentation) -> Result<Option<Equivalence>> {
    let (q1, q2) = (p1.q(), p2.q());
    if q1.shape() != q2.shape() || p1.relations().len() != p2.relations().len() {
        return Ok(None);
    }
    let mut r1 = p1.relation_degrees()?;
    let mut r2 = p2.relation_degrees()?;
    r1.sort();
    r2.sort();
    let c1 = q1.columns();
    let c2 = q2.columns();
    let rank = q1.rows();
    if q1.rank() != rank || q2.rank() != rank {
        return Ok(None);
    }

    // every vector with a forced image: the columns, then the relation degrees
    let constrained: Vec<&ClassVector> = c1.iter().chain(&r1).collect();
    let basis = spanning_basis(&c1, &constrained);
    let sources: Vec<Vec<BigRational>> = basis.iter().map(|&i| c1[i].to_rational()).collect();
    // u * B = B' with B the chosen columns, so u = B' * B^-1
    let b_inv = rational_inverse(&transpose(&sources)).expect("independent columns");
    let forced = constrained
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let lambda = mat_vec(&b_inv, &x.to_rational());
            let level = lambda.iter().rposition(|l| !l.is_zero()).map_or(0, |p| p + 1);
            let targets: &[ClassVector] = if i < c1.len() { &c2 } else { &r2 };
            Forced { lambda, level, targets }
        })
        .collect();

    let ctx = Search { c1: &c1, c2: &c2, basis: &basis, b_inv: &b_inv, forced, r1: &r1, r2: &r2 };
    let mut chosen = Vec::with_capacity(rank);
    let mut found = None;
    ctx.run(&mut chosen, &mut found);
    Ok(found)
}

fn transpose(m: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = m.first().map_or(0, Vec::len);
    (0..n).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

fn mat_vec(m: &[Vec<BigRational>], x: &[BigRational]) -> Vec<BigRational> {
    m.iter().map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
}

/// A basis of columns, each chosen to bring as many constrained vectors
/// into the span as possible, so that the search prunes early.
fn spanning_basis(cols: &[ClassVector], constrained: &[&ClassVector]) -> Vec<usize> {
    let mut picked: Vec<usize> = Vec::new();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    loop {
        let mut best: Option<(usize, usize)> = None;
        for (i, c) in cols.iter().enumerate() {
            rows.push(c.to_rational());
            let r = rational_rank(&rows);
            if r == rows.len() {
                let spanned = constrained
                    .iter()
                    .filter(|x| {
                        rows.push(x.to_rational());
                        let inside = rational_rank(&rows) == r;
                        rows.pop();
                        inside
                    })
                    .count();
                if best.is_none_or(|(_, s)| spanned > s) {
                    best = Some((i, spanned));
                }
            }
            rows.pop();
        }
        match best {
            Some((i, _)) => {
                picked.push(i);
                rows.push(cols[i].to_rational());
            }
            None => return picked,
        }
    }
}

fn multiplicity(cols: &[ClassVector], v: &ClassVector) -> usize {
    cols.iter().filter(|c| *c == v).count()
}

/// A vector whose image is determined once the first `level` basis
/// columns are assigned; the image must lie in `targets`.
struct Forced<'a> {
    lambda: Vec<BigRational>,
    level: usize,
    targets: &'a [ClassVector],
}

struct Search<'a> {
    c1: &'a [ClassVector],
    c2: &'a [ClassVector],
    basis: &'a [usize],
    b_inv: &'a [Vec<BigRational>],
    forced: Vec<Forced<'a>>,
    r1: &'a [ClassVector],
    r2: &'a [ClassVector],
}

impl Search<'_> {
    fn run(&self, chosen: &mut Vec<usize>, found: &mut Option<Equivalence>) {
        if found.is_some() {
            return;
        }
        let t = chosen.len();
        if t == self.basis.len() {
            *found = try_assignment(self.c1, self.c2, self.b_inv, self.r1, self.r2, chosen);
            return;
        }
        let src = &self.c1[self.basis[t]];
        for j in 0..self.c2.len() {
            if chosen.contains(&j) {
                continue;
            }
            let dst = &self.c2[j];
            // unimodular maps preserve content, and multiplicities must match
            if dst.content() != src.content() || multiplicity(self.c2, dst) != multiplicity(self.c1, src) {
                continue;
            }
            chosen.push(j);
            if self.forced_images_exist(chosen) {
                self.run(chosen, found);
            }
            chosen.pop();
        }
    }

    fn forced_images_exist(&self, chosen: &[usize]) -> bool {
        let t = chosen.len();
        let rows = self.c2[0].dim();
        self.forced.iter().filter(|f| f.level == t).all(|f| {
            let mut image = Vec::with_capacity(rows);
            for i in 0..rows {
                let s: BigRational = chosen
                    .iter()
                    .zip(&f.lambda)
                    .map(|(&col, l)| BigRational::from_integer(self.c2[col][i].clone()) * l)
                    .sum();
                if !s.is_integer() {
                    return false;
                }
                image.push(s.to_integer());
            }
            f.targets.contains(&ClassVector(image))
        })
    }
}

fn try_assignment(
    c1: &[ClassVector],
    c2: &[ClassVector],
    b_inv: &[Vec<BigRational>],
    r1: &[ClassVector],
    r2: &[ClassVector],
    chosen: &[usize],
) -> Option<Equivalence> {
    let n = b_inv.len();
    // u[i][k] = sum_j target[i][j] * b_inv[j][k], targets as columns
    let mut u = IntMatrix::zeros(n, n);
    for i in 0..n {
        for k in 0..n {
            let mut s = BigRational::zero();
            for (j, &col) in chosen.iter().enumerate() {
                s += BigRational::from_integer(c2[col][i].clone()) * &b_inv[j][k];
            }
            if !s.is_integer() {
                return None;
            }
            u[(i, k)] = s.to_integer();
        }
    }
    if !u.determinant().ok()?.abs().is_one() {
        return None;
    }
    let mut used = alloc::vec![false; c2.len()];
    let mut permutation = Vec::with_capacity(c1.len());
    for c in c1 {
        let image = u.mul_vec(c);
        let j = (0..c2.len()).find(|&j| !used[j] && c2[j] == image)?;
        used[j] = true;
        permutation.push(j);
    }
    let mut mapped: Vec<ClassVector> = r1.iter().map(|d| u.mul_vec(d)).collect();
    mapped.sort();
    if mapped != r2 {
        return None;
    }
    Some(Equivalence { u, permutation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::Relation;

    fn p(rows: &[[i64; 5]], rel: &[i64]) -> GradedPresentation {
        GradedPresentation::new(
            IntMatrix::from_i64_rows(rows),
            alloc::vec![Relation::generic(ClassVector::from_i64s(rel), "T5^2 - f")],
        )
        .unwrap()
    }

    #[test]
    fn permuted_columns() {
        let a = p(&[[1, 0, 1, 0, 2], [0, 1, 0, 1, 2]], &[4, 4]);
        let b = p(&[[2, 0, 1, 1, 0], [2, 1, 0, 0, 1]], &[4, 4]);
        let e = presentation_equivalent(&a, &b).unwrap().unwrap();
        assert_eq!(e.permutation.len(), 5);
        for (i, &j) in e.permutation.iter().enumerate() {
            assert_eq!(e.u.mul_vec(&a.q().col(i)), b.q().col(j));
        }
        // a basis change too
        let c = p(&[[1, 1, 1, 1, 4], [0, 1, 0, 1, 2]], &[8, 4]);
        assert!(presentation_equivalent(&a, &c).unwrap().is_some());
    }

    #[test]
    fn inequivalent() {
        let a = p(&[[1, 0, 1, 0, 2], [0, 1, 0, 1, 2]], &[4, 4]);
        let b = p(&[[1, 0, -1, -1, -1], [0, 1, 1, 1, 3]], &[-2, 6]);
        assert!(presentation_equivalent(&a, &b).unwrap().is_none());
        // same columns, wrong relation degree
        let c = p(&[[1, 0, 1, 0, 2], [0, 1, 0, 1, 2]], &[4, 2]);
        assert!(presentation_equivalent(&a, &c).unwrap().is_none());
    }
}
