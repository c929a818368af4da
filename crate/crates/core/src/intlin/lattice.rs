//! Kernels, surjectivity and Gale duality for integer matrices.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::{One, Signed};

use super::smith::{hermite_normal_form, smith_normal_form};
use super::{ClassVector, IntMatrix};
use crate::{Error, Result};

/// Basis of the saturated lattice `{x in Z^n : m x = 0}`, as the columns of
/// an `n x (n - rank)` matrix.
pub fn kernel_lattice(m: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(m);
    let r = s.rank();
    let n = m.cols();
    let cols: Vec<ClassVector> = (r..n).map(|j| s.v.col(j)).collect();
    IntMatrix::from_columns(n, &cols).expect("kernel columns have length n")
}

/// True iff `m : Z^cols -> Z^rows` is onto, i.e. full row rank with all
/// invariant factors equal to one.
pub fn is_surjective(m: &IntMatrix) -> bool {
    let s = smith_normal_form(m);
    let f = s.invariant_factors();
    f.len() == m.rows() && f.iter().all(One::is_one)
}

/// Gale dual of a surjection `p : Z^n -> Z^d`: a surjection `q : Z^n -> Z^(n-d)`
/// whose rows are a basis of the integer kernel of `p`, so `q * p^T = 0`.
/// The result is returned in Hermite normal form.
pub fn gale_dual(p: &IntMatrix) -> Result<IntMatrix> {
    if !is_surjective(p) {
        let f = smith_normal_form(p).invariant_factors();
        return Err(Error::NotSurjective(format!(
            "{}x{} matrix with invariant factors {:?} (the columns do not span the lattice)",
            p.rows(),
            p.cols(),
            f.iter().map(ToString::to_string).collect::<Vec<_>>()
        )));
    }
    let k = kernel_lattice(p).transpose();
    Ok(hermite_normal_form(&k).0)
}

/// Decides whether `q1 = u * q2` for a unimodular `u`. Both matrices must be
/// surjective; the test is equality of their (saturated) kernels.
pub fn unimodular_row_equivalent(q1: &IntMatrix, q2: &IntMatrix) -> Result<bool> {
    if q1.shape() != q2.shape() {
        return Err(Error::Shape(format!("{:?} vs {:?}", q1.shape(), q2.shape())));
    }
    if !is_surjective(q1) || !is_surjective(q2) {
        return Err(Error::NotSurjective(String::from("unimodular_row_equivalent needs surjections")));
    }
    let k1 = kernel_lattice(q1);
    let k2 = kernel_lattice(q2);
    Ok((q2 * &k1).is_zero() && (q1 * &k2).is_zero())
}

/// A right inverse `r` of a surjection `q` (so `q * r = 1`).
pub fn right_inverse(q: &IntMatrix) -> Result<IntMatrix> {
    if !is_surjective(q) {
        return Err(Error::NotSurjective(String::from("no integral right inverse")));
    }
    let s = smith_normal_form(q);
    let (r, n) = q.shape();
    let mut e = IntMatrix::zeros(n, r);
    for i in 0..r {
        e[(i, i)] = num_bigint::BigInt::one();
    }
    Ok(&(&s.v * &e) * &s.u)
}

/// The unimodular `u` with `u * from == to`, if one exists.
pub fn unimodular_transform(from: &IntMatrix, to: &IntMatrix) -> Result<Option<IntMatrix>> {
    if from.cols() != to.cols() || from.rows() != to.rows() {
        return Err(Error::Shape(format!("{:?} vs {:?}", from.shape(), to.shape())));
    }
    let r = right_inverse(from)?;
    let u = to * &r;
    if &u * from != *to {
        return Ok(None);
    }
    Ok(u.determinant()?.abs().is_one().then_some(u))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_row_vector() {
        let k = kernel_lattice(&IntMatrix::from_i64_rows(&[[1, 1]]));
        assert_eq!(k.shape(), (2, 1));
        let v = k.col(0);
        assert!(v == ClassVector::from_i64s(&[1, -1]) || v == ClassVector::from_i64s(&[-1, 1]));
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        assert_eq!(kernel_lattice(&IntMatrix::identity(3)).cols(), 0);
    }

    #[test]
    fn kernel_is_saturated() {
        // x + 2y + 4z = 0 ; the kernel is spanned by (2,-1,0),(0,2,-1) and is saturated
        let m = IntMatrix::from_i64_rows(&[[2, 4, 8]]);
        let k = kernel_lattice(&m);
        assert!((&m * &k).is_zero());
        assert!(is_surjective(&k.transpose()));
    }

    #[test]
    fn gale_dual_of_p1xp1() {
        let p = IntMatrix::from_i64_rows(&[[1, 0, -1, 0], [0, 1, 0, -1]]);
        let q = gale_dual(&p).unwrap();
        assert!((&q * &p.transpose()).is_zero());
        let expected = IntMatrix::from_i64_rows(&[[1, 0, 1, 0], [0, 1, 0, 1]]);
        assert!(unimodular_row_equivalent(&q, &expected).unwrap());
    }

    #[test]
    fn gale_dual_rejects_non_spanning_rays() {
        let p = IntMatrix::from_i64_rows(&[[2, 0, -2, 0], [0, 1, 0, -1]]);
        assert!(matches!(gale_dual(&p), Err(Error::NotSurjective(_))));
    }

    #[test]
    fn row_equivalence_examples() {
        let q = IntMatrix::from_i64_rows(&[[1, 0, 1, 0], [0, 1, 0, 1]]);
        assert!(unimodular_row_equivalent(&q, &-&q).unwrap());
        let q2 = IntMatrix::from_i64_rows(&[[1, 1, 1, 1], [0, 1, 0, 1]]);
        assert!(unimodular_row_equivalent(&q, &q2).unwrap());
        let q3 = IntMatrix::from_i64_rows(&[[1, 0, 1, 4], [0, 1, 0, 1]]);
        assert!(!unimodular_row_equivalent(&q, &q3).unwrap());
        let bad = IntMatrix::from_i64_rows(&[[1, 0, 1], [0, 1, 0]]);
        assert!(matches!(unimodular_row_equivalent(&q, &bad), Err(Error::Shape(_))));
    }

    #[test]
    fn transform_between_equivalent_matrices() {
        let q = IntMatrix::from_i64_rows(&[[1, 0, 1, 0], [0, 1, 0, 1]]);
        let q2 = IntMatrix::from_i64_rows(&[[1, 1, 1, 1], [0, 1, 0, 1]]);
        let u = unimodular_transform(&q, &q2).unwrap().unwrap();
        assert_eq!(&u * &q, q2);
        let q3 = IntMatrix::from_i64_rows(&[[1, 0, 1, 4], [0, 1, 0, 1]]);
        assert!(unimodular_transform(&q, &q3).unwrap().is_none());
    }
}
