use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::GradedPresentation;
use crate::cones::{positive_functional, Cone};
use crate::intlin::{ClassVector, IntMatrix};
use crate::{Error, Result};

/// Number of `x in Z^n_{>=0}` with `q x = w`.
pub fn count_monomials(q: &IntMatrix, w: &ClassVector) -> Result<BigUint> {
    Ok(MonomialCounter::new(q)?.count(w))
}

/// Counts monomials of a fixed multidegree by depth-first search over the
/// variables, bounded by a linear form positive on every degree.
#[derive(Debug, Clone)]
pub struct MonomialCounter {
    columns: Vec<ClassVector>,
    phi: ClassVector,
    weights: Vec<BigInt>,
    /// `tails[j]`: inequalities of the cone spanned by columns `j..`
    tails: Vec<Vec<ClassVector>>,
    memo: BTreeMap<(usize, ClassVector), BigUint>,
}

impl MonomialCounter {
    pub fn new(q: &IntMatrix) -> Result<Self> {
        let columns = q.columns();
        let phi = positive_functional(q.rows(), &columns)?.ok_or(Error::NotPointed)?;
        let weights = columns.iter().map(|c| phi.dot(c)).collect();
        let tails = (0..columns.len())
            .map(|j| match Cone::positive_hull(q.rows(), &columns[j..]) {
                Ok(cone) => cone.dual().generators(),
                // beyond the dimension cap: no pruning
                Err(_) => Vec::new(),
            })
            .collect();
        Ok(MonomialCounter { columns, phi, weights, tails, memo: BTreeMap::new() })
    }

    /// The certificate: `phi . deg T_i > 0` for every generator.
    pub fn functional(&self) -> &ClassVector {
        &self.phi
    }

    pub fn count(&mut self, w: &ClassVector) -> BigUint {
        if w.dim() != self.phi.dim() {
            return BigUint::zero();
        }
        if self.columns.is_empty() {
            return if w.is_zero() { BigUint::one() } else { BigUint::zero() };
        }
        self.go(0, w.clone())
    }

    fn go(&mut self, j: usize, w: ClassVector) -> BigUint {
        let level = self.phi.dot(&w);
        if level.is_negative() || self.tails[j].iter().any(|h| h.dot(&w).is_negative()) {
            return BigUint::zero();
        }
        if j + 1 == self.columns.len() {
            let c = &self.columns[j];
            let (k, r) = level.div_rem(&self.weights[j]);
            return if r.is_zero() && c.scale(&k) == w { BigUint::one() } else { BigUint::zero() };
        }
        let key = (j, w);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let (_, w) = key;
        let max = (&level / &self.weights[j]).to_u64().expect("exponent bound fits in u64");
        let c = self.columns[j].clone();
        let mut total = BigUint::zero();
        let mut rest = w.clone();
        for _ in 0..=max {
            total += self.go(j + 1, rest.clone());
            rest = &rest - &c;
        }
        self.memo.insert((j, w), total.clone());
        total
    }

    /// All exponent vectors of degree `w`, in lexicographic order. Fails if
    /// there are more than `cap`.
    pub fn monomials(&mut self, w: &ClassVector, cap: usize) -> Result<Vec<Vec<i64>>> {
        let n = self.count(w);
        if n > BigUint::from(cap) {
            return Err(Error::CapExceeded(format!("{n} monomials of degree {w}, cap {cap}")));
        }
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.columns.len());
        self.collect(0, w.clone(), &mut cur, &mut out);
        Ok(out)
    }

    fn collect(&mut self, j: usize, w: ClassVector, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if j == self.columns.len() {
            if w.is_zero() {
                out.push(cur.clone());
            }
            return;
        }
        if self.go(j, w.clone()).is_zero() {
            return;
        }
        let level = self.phi.dot(&w);
        let max = (&level / &self.weights[j]).to_i64().expect("exponent bound fits in i64");
        let c = self.columns[j].clone();
        let mut rest = w;
        for e in 0..=max {
            cur.push(e);
            self.collect(j + 1, rest.clone(), cur, out);
            cur.pop();
            rest = &rest - &c;
        }
    }
}

/// `dim R_w` for a complete intersection, by inclusion-exclusion over the
/// relation degrees (which must form a regular sequence).
pub fn ci_hilbert(pres: &GradedPresentation, w: &ClassVector) -> Result<BigInt> {
    if !pres.is_complete_intersection() {
        return Err(Error::NotCompleteIntersection(format!(
            "{} relations on {} generators graded in rank {}",
            pres.relations().len(),
            pres.num_generators(),
            pres.grading_rank()
        )));
    }
    let degrees = pres.relation_degrees()?;
    let mut counter = MonomialCounter::new(pres.q())?;
    let mut total = BigInt::zero();
    for mask in 0u32..(1 << degrees.len()) {
        let mut v = w.clone();
        for (i, d) in degrees.iter().enumerate() {
            if mask & (1 << i) != 0 {
                v = &v - d;
            }
        }
        let c = BigInt::from(counter.count(&v));
        if mask.count_ones() % 2 == 0 {
            total += c;
        } else {
            total -= c;
        }
    }
    Ok(total)
}
