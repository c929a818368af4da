use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::intlin::{gale_dual, is_surjective, rational_rank, ClassVector, IntMatrix};
use crate::{Error, Result};

/// A simplicial fan given by primitive rays and its maximal cones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    rank: usize,
    rays: Vec<ClassVector>,
    max_cones: Vec<Vec<usize>>,
}

/// Cox ring of a toric variety: a polynomial ring in one variable per ray,
/// graded by the columns of `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricCoxPresentation {
    /// Rays as columns.
    pub p: IntMatrix,
    /// Gale dual of `p`; column `i` is `deg T_{i+1}`.
    pub q: IntMatrix,
    pub variables: Vec<String>,
}

impl ToricCoxPresentation {
    pub fn degree(&self, i: usize) -> ClassVector {
        self.q.col(i)
    }

    /// `-sum of deg T_i`, the canonical class of the toric variety.
    pub fn canonical_class(&self) -> ClassVector {
        let mut k = ClassVector::zero(self.q.rows());
        for c in self.q.columns() {
            k = &k - &c;
        }
        k
    }
}

impl Fan {
    /// Validates: rays primitive, distinct and spanning `Z^rank`; every maximal
    /// cone a set of linearly independent rays with indices in range.
    pub fn new(rank: usize, rays: Vec<ClassVector>, max_cones: Vec<Vec<usize>>) -> Result<Self> {
        for (i, r) in rays.iter().enumerate() {
            if r.dim() != rank {
                return Err(Error::InvalidFan(format!("ray {} = {r} is not in Z^{rank}", i + 1)));
            }
            if !r.is_primitive() {
                return Err(Error::InvalidFan(format!("ray {} = {r} is not primitive", i + 1)));
            }
            if rays[..i].contains(r) {
                return Err(Error::InvalidFan(format!("ray {r} occurs twice")));
            }
        }
        let mut cones = Vec::with_capacity(max_cones.len());
        for c in max_cones {
            let mut c = c;
            c.sort_unstable();
            c.dedup();
            if let Some(&bad) = c.iter().find(|&&i| i >= rays.len()) {
                return Err(Error::InvalidFan(format!("cone index {bad} out of range")));
            }
            let rows: Vec<_> = c.iter().map(|&i| rays[i].to_rational()).collect();
            if rational_rank(&rows) != c.len() {
                return Err(Error::InvalidFan(format!("cone {c:?} is not simplicial")));
            }
            cones.push(c);
        }
        let fan = Fan { rank, rays, max_cones: cones };
        if !is_surjective(&fan.ray_matrix()) {
            return Err(Error::InvalidFan(String::from("rays do not span the lattice")));
        }
        Ok(fan)
    }

    pub fn from_i64<const C: usize>(rays: &[[i64; C]], max_cones: &[&[usize]]) -> Result<Self> {
        Self::new(
            C,
            rays.iter().map(|r| ClassVector::from_i64s(r)).collect(),
            max_cones.iter().map(|c| c.to_vec()).collect(),
        )
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rays(&self) -> &[ClassVector] {
        &self.rays
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    /// Rays as the columns of a `rank x r` matrix.
    pub fn ray_matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(self.rank, &self.rays).expect("rays have length rank")
    }

    /// True iff `indices` is a face of some maximal cone.
    pub fn is_cone(&self, indices: &[usize]) -> bool {
        self.max_cones.iter().any(|c| indices.iter().all(|i| c.contains(i)))
    }

    /// Every facet of a full-dimensional maximal cone is shared by exactly
    /// two maximal cones lying on opposite sides of it. In rank two the cones
    /// must also be the consecutive pairs in angular order.
    pub fn is_complete(&self) -> bool {
        if self.max_cones.iter().any(|c| c.len() != self.rank) || self.rays.is_empty() {
            return false;
        }
        let mut facets: BTreeMap<Vec<usize>, Vec<BigInt>> = BTreeMap::new();
        for c in &self.max_cones {
            for (k, &apex) in c.iter().enumerate() {
                let mut f = c.clone();
                f.remove(k);
                // side of the apex relative to the hyperplane spanned by f
                let mut cols: Vec<ClassVector> = f.iter().map(|&i| self.rays[i].clone()).collect();
                cols.push(self.rays[apex].clone());
                let det = IntMatrix::from_columns(self.rank, &cols).unwrap().determinant().unwrap();
                facets.entry(f).or_default().push(det);
            }
        }
        let paired = facets.values().all(|s| s.len() == 2 && (s[0].is_positive() != s[1].is_positive()));
        if !paired {
            return false;
        }
        if self.rank == 2 {
            return self.cyclic_2d();
        }
        true
    }

    /// In rank two: the maximal cones are exactly the pairs of rays that are
    /// consecutive in angular order, each turning counterclockwise by less than pi.
    fn cyclic_2d(&self) -> bool {
        let n = self.rays.len();
        if n < 3 || self.max_cones.len() != n {
            return false;
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| angle_cmp(&self.rays[a], &self.rays[b]));
        (0..n).all(|k| {
            let (a, b) = (order[k], order[(k + 1) % n]);
            let (x, y) = (&self.rays[a], &self.rays[b]);
            let det = &x[0] * &y[1] - &x[1] * &y[0];
            let mut pair = alloc::vec![a, b];
            pair.sort_unstable();
            det.is_positive() && self.max_cones.contains(&pair)
        })
    }

    /// Stellar subdivision at the cone spanned by `indices`: the new ray is
    /// the sum of those rays and is appended as the last ray.
    pub fn stellar_subdivide(&self, indices: &[usize]) -> Result<Fan> {
        let mut tau = indices.to_vec();
        tau.sort_unstable();
        tau.dedup();
        if tau.is_empty() || !self.is_cone(&tau) {
            return Err(Error::NotACone(format!("{:?}", tau.iter().map(|i| i + 1).collect::<Vec<_>>())));
        }
        let mut v = ClassVector::zero(self.rank);
        for &i in &tau {
            v = &v + &self.rays[i];
        }
        if !v.is_primitive() {
            return Err(Error::NotPrimitive(format!("{v}")));
        }
        let new = self.rays.len();
        let mut cones = Vec::new();
        for c in &self.max_cones {
            if !tau.iter().all(|i| c.contains(i)) {
                cones.push(c.clone());
                continue;
            }
            for &i in &tau {
                let mut d: Vec<usize> = c.iter().copied().filter(|&j| j != i).collect();
                d.push(new);
                cones.push(d);
            }
        }
        let mut rays = self.rays.clone();
        rays.push(v);
        Fan::new(self.rank, rays, cones)
    }

    /// Rays and the Gale dual degree matrix.
    pub fn cox_construction(&self) -> Result<ToricCoxPresentation> {
        let p = self.ray_matrix();
        let q = gale_dual(&p)?;
        let variables = (1..=self.rays.len()).map(|i| format!("T{i}")).collect();
        Ok(ToricCoxPresentation { p, q, variables })
    }

    /// Self-intersection of the invariant curve of ray `i` on a smooth complete
    /// surface: the neighbouring rays satisfy `u + w = a v_i` and `D_i^2 = -a`.
    pub fn self_intersection_2d(&self, i: usize) -> Option<BigInt> {
        if self.rank != 2 {
            return None;
        }
        let nbrs: Vec<usize> =
            self.max_cones.iter().filter(|c| c.contains(&i)).map(|c| if c[0] == i { c[1] } else { c[0] }).collect();
        let [a, b] = nbrs[..] else { return None };
        let s = &self.rays[a] + &self.rays[b];
        let v = &self.rays[i];
        let k = (0..2).find(|&j| !v[j].is_zero())?;
        let m = &s[k] / &v[k];
        (v.scale(&m) == s).then(|| -m)
    }
}

/// Exact comparison of the angles of two nonzero plane vectors in `[0, 2 pi)`.
fn angle_cmp(a: &ClassVector, b: &ClassVector) -> core::cmp::Ordering {
    let half = |v: &ClassVector| u8::from(v[1].is_negative() || (v[1].is_zero() && v[0].is_negative()));
    half(a).cmp(&half(b)).then_with(|| {
        let det = &a[0] * &b[1] - &a[1] * &b[0];
        BigInt::zero().cmp(&det)
    })
}
