//! Buchberger's algorithm in grevlex order, truncated at a multidegree.
//!
//! Only S-pairs whose lcm divides some monomial of the target degree are
//! formed; in a positively graded ring this computes the initial ideal
//! correctly in every degree below the target.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::count::MonomialCounter;
use super::{GradedPresentation, Relation};
use crate::intlin::ClassVector;
use crate::{Error, Result};

/// Default bound on the number of S-pairs reduced.
pub const DEFAULT_SPAIR_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
struct Mono(Vec<i64>);

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (da, db): (i64, i64) = (a.iter().sum(), b.iter().sum());
        da.cmp(&db).then_with(|| match (0..a.len()).rev().find(|&i| a[i] != b[i]) {
            Some(i) => b[i].cmp(&a[i]),
            None => Ordering::Equal,
        })
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mono {
    fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn lcm(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    fn quotient(&self, by: &Mono) -> Mono {
        Mono(self.0.iter().zip(&by.0).map(|(a, b)| a - b).collect())
    }

    fn coprime(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Poly(BTreeMap<Mono, BigRational>);

impl Poly {
    fn leading(&self) -> Option<(&Mono, &BigRational)> {
        self.0.last_key_value()
    }

    fn monic(mut self) -> Poly {
        if let Some((_, c)) = self.leading() {
            let c = c.clone();
            for v in self.0.values_mut() {
                *v /= &c;
            }
        }
        self
    }

    /// `self -= c * x^m * g`
    fn sub_multiple(&mut self, c: &BigRational, m: &Mono, g: &Poly) {
        for (e, x) in &g.0 {
            let key = Mono(e.0.iter().zip(&m.0).map(|(a, b)| a + b).collect());
            let entry = self.0.entry(key.clone()).or_insert_with(BigRational::zero);
            *entry -= c * x;
            if entry.is_zero() {
                self.0.remove(&key);
            }
        }
    }

    /// Remainder on division by `basis` (all leading coefficients one).
    fn reduce(mut self, basis: &[Poly]) -> Poly {
        let mut rem = Poly(BTreeMap::new());
        while let Some((lm, lc)) = self.leading() {
            let (lm, lc) = (lm.clone(), lc.clone());
            match basis.iter().find(|g| g.leading().is_some_and(|(m, _)| m.divides(&lm))) {
                Some(g) => {
                    let q = lm.quotient(g.leading().unwrap().0);
                    self.sub_multiple(&lc, &q, g);
                }
                None => {
                    self.0.remove(&lm);
                    rem.0.insert(lm, lc);
                }
            }
        }
        rem
    }
}

/// Number of standard monomials of degree `w`, i.e. `dim R_w`, for a
/// presentation with explicit homogeneous relations.
pub fn standard_monomial_count(pres: &GradedPresentation, w: &ClassVector, cap: usize) -> Result<BigUint> {
    if pres.has_generic_relations() {
        return Err(Error::GenericRelation);
    }
    pres.relation_degrees()?;
    let q = pres.q();
    let mut counter = MonomialCounter::new(q)?;
    let degree = |m: &Mono| q.mul_vec(&ClassVector(m.0.iter().map(|&x| x.into()).collect()));
    let below = |counter: &mut MonomialCounter, m: &Mono| !counter.count(&(w - &degree(m))).is_zero();

    let mut basis: Vec<Poly> = Vec::new();
    for r in pres.relations() {
        let Relation::Explicit(p) = r else { unreachable!() };
        let f = Poly(p.terms().map(|(e, c)| (Mono(e.clone()), c.clone())).collect());
        if f.leading().is_some_and(|(m, _)| below(&mut counter, m)) {
            let f = f.reduce(&basis);
            if f.leading().is_some() {
                basis.push(f.monic());
            }
        }
    }

    let mut pairs: Vec<(usize, usize)> = (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    sort_pairs(&basis, &mut pairs);
    let mut processed = 0usize;
    while let Some((i, j)) = pairs.pop() {
        let (mi, mj) = (basis[i].leading().unwrap().0.clone(), basis[j].leading().unwrap().0.clone());
        if mi.coprime(&mj) {
            continue;
        }
        let l = mi.lcm(&mj);
        if !below(&mut counter, &l) {
            continue;
        }
        processed += 1;
        if processed > cap {
            return Err(Error::CapExceeded(format!("more than {cap} S-pairs")));
        }
        let mut s = Poly(BTreeMap::new());
        s.sub_multiple(&-BigRational::one(), &l.quotient(&mi), &basis[i]);
        s.sub_multiple(&BigRational::one(), &l.quotient(&mj), &basis[j]);
        let r = s.reduce(&basis);
        if r.leading().is_some() {
            let k = basis.len();
            basis.push(r.monic());
            pairs.extend((0..k).map(|i| (i, k)));
            sort_pairs(&basis, &mut pairs);
        }
    }

    let leads: Vec<Mono> = basis.iter().map(|g| g.leading().unwrap().0.clone()).collect();
    let monomials = counter.monomials(w, cap)?;
    let standard = monomials.into_iter().filter(|e| {
        let m = Mono(e.clone());
        !leads.iter().any(|l| l.divides(&m))
    });
    Ok(BigUint::from(standard.count()))
}

/// Orders the stack so that the pair with the smallest lcm is popped next.
fn sort_pairs(basis: &[Poly], pairs: &mut [(usize, usize)]) {
    pairs.sort_by(|a, b| lcm_of(basis, *b).cmp(&lcm_of(basis, *a)).then(b.cmp(a)));
}

fn lcm_of(basis: &[Poly], (i, j): (usize, usize)) -> Mono {
    basis[i].leading().unwrap().0.lcm(basis[j].leading().unwrap().0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intlin::IntMatrix;
    use crate::toric::LaurentPolynomial;

    fn pres(q: IntMatrix, rels: &[&str]) -> GradedPresentation {
        let n = q.cols();
        let rels = rels.iter().map(|s| Relation::Explicit(LaurentPolynomial::parse(s, n).unwrap())).collect();
        GradedPresentation::new(q, rels).unwrap()
    }

    fn smc(p: &GradedPresentation, w: &[i64]) -> u64 {
        use num_traits::ToPrimitive;
        standard_monomial_count(p, &ClassVector::from_i64s(w), DEFAULT_SPAIR_CAP).unwrap().to_u64().unwrap()
    }

    #[test]
    fn grevlex_order() {
        // x1 > x2 > x3 and x1 x3 < x2^2 in grevlex
        assert!(Mono(alloc::vec![1, 0, 0]) > Mono(alloc::vec![0, 1, 0]));
        assert!(Mono(alloc::vec![1, 0, 1]) < Mono(alloc::vec![0, 2, 0]));
        assert!(Mono(alloc::vec![0, 0, 2]) > Mono(alloc::vec![1, 0, 0]));
    }

    #[test]
    fn one_binomial() {
        let p = pres(IntMatrix::from_i64_rows(&[[1, 1, 1]]), &["T1*T2 - T3^2"]);
        assert_eq!(smc(&p, &[2]), 5);
        assert_eq!(smc(&p, &[3]), 10 - 3);
    }

    #[test]
    fn no_relations() {
        let p = pres(IntMatrix::from_i64_rows(&[[1, 0, 1, 0], [0, 1, 0, 1]]), &[]);
        assert_eq!(smc(&p, &[2, 2]), 9);
    }

    #[test]
    fn twisted_cubic() {
        // 2x2 minors of [[x, y, z], [y, z, w]]: Hilbert function 3d + 1
        let p = pres(IntMatrix::from_i64_rows(&[[1, 1, 1, 1]]), &["T1*T3 - T2^2", "T2*T4 - T3^2", "T1*T4 - T2*T3"]);
        for d in 0..6 {
            assert_eq!(smc(&p, &[d]), 3 * d as u64 + 1);
        }
    }

    #[test]
    fn generic_relations_are_rejected() {
        let q = IntMatrix::from_i64_rows(&[[1, 1]]);
        let p = GradedPresentation::new(q, alloc::vec![Relation::generic(ClassVector::from_i64s(&[2]), "f")]).unwrap();
        assert_eq!(standard_monomial_count(&p, &ClassVector::from_i64s(&[2]), 10), Err(Error::GenericRelation));
    }

    #[test]
    fn cap() {
        let p = pres(IntMatrix::from_i64_rows(&[[1, 1, 1, 1]]), &["T1*T3 - T2^2", "T2*T4 - T3^2", "T1*T4 - T2*T3"]);
        assert!(matches!(standard_monomial_count(&p, &ClassVector::from_i64s(&[4]), 0), Err(Error::CapExceeded(_))));
    }
}
