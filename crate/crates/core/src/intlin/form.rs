//! Even lattices given by Gram matrices.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::smith::smith_normal_form;
use super::{rational_inverse, ClassVector, IntMatrix};
use crate::{Error, Result};

/// A lattice `Z^n` with the pairing `x^T G y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GramForm {
    gram: IntMatrix,
    even: bool,
}

/// Invariants `(k, a, delta)` of a 2-elementary lattice: rank `k`, discriminant
/// group `(Z/2)^a`, and `delta = 0` iff every dual vector has integral square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoElementaryInvariants {
    pub rank: usize,
    pub a: usize,
    pub delta: u8,
}

impl GramForm {
    pub fn new(gram: IntMatrix) -> Result<Self> {
        if !gram.is_symmetric() {
            return Err(Error::Shape(format!("Gram matrix must be square and symmetric, got {gram}")));
        }
        let even = (0..gram.rows()).all(|i| gram[(i, i)].is_even());
        Ok(GramForm { gram, even })
    }

    pub fn from_i64_rows<const C: usize>(rows: &[[i64; C]]) -> Result<Self> {
        Self::new(IntMatrix::from_i64_rows(rows))
    }

    /// The hyperbolic plane `[[0,1],[1,0]]`.
    pub fn u() -> Self {
        Self::from_i64_rows(&[[0, 1], [1, 0]]).unwrap()
    }

    /// The root lattice `A1 = (-2)`.
    pub fn a1() -> Self {
        Self::from_i64_rows(&[[-2]]).unwrap()
    }

    /// The rank-one lattice `(n)`.
    pub fn rank_one(n: i64) -> Self {
        Self::from_i64_rows(&[[n]]).unwrap()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn is_even(&self) -> bool {
        self.even
    }

    pub fn determinant(&self) -> BigInt {
        self.gram.determinant().expect("Gram matrix is square")
    }

    pub fn pair(&self, x: &ClassVector, y: &ClassVector) -> BigInt {
        x.dot(&self.gram.mul_vec(y))
    }

    pub fn square(&self, x: &ClassVector) -> BigInt {
        self.pair(x, x)
    }

    /// `L(k)`: the pairing multiplied by `k`.
    pub fn twist(&self, k: i64) -> Self {
        let k = BigInt::from(k);
        let mut g = self.gram.clone();
        for i in 0..g.rows() {
            for j in 0..g.cols() {
                g[(i, j)] *= &k;
            }
        }
        Self::new(g).unwrap()
    }

    /// Orthogonal direct sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (n, m) = (self.rank(), other.rank());
        let mut g = IntMatrix::zeros(n + m, n + m);
        for i in 0..n {
            for j in 0..n {
                g[(i, j)] = self.gram[(i, j)].clone();
            }
        }
        for i in 0..m {
            for j in 0..m {
                g[(n + i, n + j)] = other.gram[(i, j)].clone();
            }
        }
        Self::new(g).unwrap()
    }

    /// `n` copies of `self` summed.
    pub fn power(&self, n: usize) -> Self {
        let mut acc = Self::new(IntMatrix::zeros(0, 0)).unwrap();
        for _ in 0..n {
            acc = acc.direct_sum(self);
        }
        acc
    }

    /// Inertia `(positives, negatives)` by rational congruence diagonalization.
    pub fn signature(&self) -> Result<(usize, usize)> {
        let n = self.rank();
        let mut a = self.gram.to_rational();
        let (mut pos, mut neg) = (0, 0);
        for i in 0..n {
            if a[i][i].is_zero() {
                if let Some(j) = (i + 1..n).find(|&j| !a[j][j].is_zero()) {
                    a.swap(i, j);
                    for row in a.iter_mut() {
                        row.swap(i, j);
                    }
                } else if let Some(j) = (i + 1..n).find(|&j| !a[i][j].is_zero()) {
                    // both diagonal entries vanish: x_i + x_j has square 2 a_ij
                    for k in 0..n {
                        let v = a[j][k].clone();
                        a[i][k] += v;
                    }
                    for k in 0..n {
                        let v = a[k][j].clone();
                        a[k][i] += v;
                    }
                } else {
                    return Err(Error::Degenerate);
                }
            }
            let p = a[i][i].clone();
            for j in i + 1..n {
                if a[j][i].is_zero() {
                    continue;
                }
                let f: BigRational = &a[j][i] / &p;
                for k in i..n {
                    let v = &f * &a[i][k];
                    a[j][k] -= v;
                }
                for k in i..n {
                    let v = &f * &a[k][i];
                    a[k][j] -= v;
                }
            }
            if p.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
        }
        Ok((pos, neg))
    }

    /// Invariants of a 2-elementary even lattice.
    pub fn two_elementary(&self) -> Result<TwoElementaryInvariants> {
        if !self.even {
            return Err(Error::NotEven);
        }
        let n = self.rank();
        let factors = smith_normal_form(&self.gram).invariant_factors();
        if factors.len() < n {
            return Err(Error::Degenerate);
        }
        let two = BigInt::from(2);
        if factors.iter().any(|f| !f.is_one() && *f != two) {
            return Err(Error::NotTwoElementary(format!(
                "{:?}",
                factors.iter().map(ToString::to_string).collect::<Vec<_>>()
            )));
        }
        let a = factors.iter().filter(|f| **f == two).count();
        // the dual lattice is generated by the columns of G^-1, whose squares
        // are the diagonal entries; mixed terms are 2 b(u_i, u_j) with
        // b(u_i, u_j) in (1/2)Z, hence integral
        let inv = rational_inverse(&self.gram.to_rational()).ok_or(Error::Degenerate)?;
        let delta = u8::from((0..n).any(|i| !inv[i][i].is_integer()));
        Ok(TwoElementaryInvariants { rank: n, a, delta })
    }
}
