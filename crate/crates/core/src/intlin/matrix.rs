use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// An integer vector, read as a divisor class in a fixed basis of a class group
/// (or as a ray generator in a lattice `N`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ClassVector(pub Vec<BigInt>);

impl ClassVector {
    pub fn zero(dim: usize) -> Self {
        ClassVector(vec![BigInt::zero(); dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = BigInt::one();
        v
    }

    pub fn from_i64s(xs: &[i64]) -> Self {
        ClassVector(xs.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn iter(&self) -> core::slice::Iter<'_, BigInt> {
        self.0.iter()
    }

    /// Gcd of the entries (0 for the zero vector).
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// Divides out the content; the zero vector is returned unchanged.
    pub fn primitive(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        ClassVector(self.0.iter().map(|x| x / &g).collect())
    }

    pub fn dot(&self, other: &Self) -> BigInt {
        assert_eq!(self.dim(), other.dim(), "dot product of vectors of different length");
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        ClassVector(self.0.iter().map(|x| x * k).collect())
    }

    /// Exact division by `k`; `None` if some entry is not divisible.
    pub fn div_exact(&self, k: &BigInt) -> Option<Self> {
        if k.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(self.dim());
        for x in &self.0 {
            let (q, r) = x.div_rem(k);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(ClassVector(out))
    }

    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.0.iter().map(|x| x.to_i64()).collect()
    }

    pub fn to_rational(&self) -> Vec<BigRational> {
        self.0.iter().map(|x| BigRational::from_integer(x.clone())).collect()
    }
}

impl From<Vec<BigInt>> for ClassVector {
    fn from(v: Vec<BigInt>) -> Self {
        ClassVector(v)
    }
}

impl Index<usize> for ClassVector {
    type Output = BigInt;
    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl IndexMut<usize> for ClassVector {
    fn index_mut(&mut self, i: usize) -> &mut BigInt {
        &mut self.0[i]
    }
}

impl<'a> Add<&'a ClassVector> for &'a ClassVector {
    type Output = ClassVector;
    fn add(self, rhs: &ClassVector) -> ClassVector {
        assert_eq!(self.dim(), rhs.dim());
        ClassVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a ClassVector> for &'a ClassVector {
    type Output = ClassVector;
    fn sub(self, rhs: &ClassVector) -> ClassVector {
        assert_eq!(self.dim(), rhs.dim());
        ClassVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &ClassVector {
    type Output = ClassVector;
    fn neg(self) -> ClassVector {
        ClassVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for ClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Sum of a list of vectors of dimension `dim`.
pub fn sum_vectors<'a>(dim: usize, vs: impl IntoIterator<Item = &'a ClassVector>) -> ClassVector {
    vs.into_iter().fold(ClassVector::zero(dim), |acc, v| &acc + v)
}

/// Dense row-major integer matrix with arbitrary-precision entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn diagonal(entries: &[BigInt]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in entries.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape(String::from("ragged rows")));
        }
        Ok(IntMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64_rows<const C: usize>(rows: &[[i64; C]]) -> Self {
        IntMatrix {
            rows: rows.len(),
            cols: C,
            data: rows.iter().flat_map(|r| r.iter().map(|&x| BigInt::from(x))).collect(),
        }
    }

    /// Matrix whose columns are the given vectors (all of dimension `dim`).
    pub fn from_columns(dim: usize, cols: &[ClassVector]) -> Result<Self> {
        let mut m = Self::zeros(dim, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.dim() != dim {
                return Err(Error::Shape(alloc::format!("column {j} has length {} instead of {dim}", c.dim())));
            }
            for i in 0..dim {
                m[(i, j)] = c[i].clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, i: usize) -> ClassVector {
        ClassVector(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn col(&self, j: usize) -> ClassVector {
        ClassVector((0..self.rows).map(|i| self[(i, j)].clone()).collect())
    }

    pub fn columns(&self) -> Vec<ClassVector> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).0).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn mul_vec(&self, v: &ClassVector) -> ClassVector {
        assert_eq!(self.cols, v.dim(), "matrix-vector shape mismatch");
        ClassVector((0..self.rows).map(|i| self.row(i).dot(v)).collect())
    }

    pub fn checked_mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(alloc::format!("{}x{} * {}x{}", self.rows, self.cols, rhs.rows, rhs.cols)));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a * &rhs[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        Ok(out)
    }

    /// Appends the given column on the right.
    pub fn with_column(&self, c: &ClassVector) -> Result<IntMatrix> {
        let mut cols = self.columns();
        cols.push(c.clone());
        Self::from_columns(self.rows, &cols)
    }

    pub fn select_columns(&self, idx: &[usize]) -> IntMatrix {
        let cols: Vec<ClassVector> = idx.iter().map(|&j| self.col(j)).collect();
        Self::from_columns(self.rows, &cols).expect("columns have matching length")
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = k * &self[(src, j)];
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += k * col[src]
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let v = k * &self[(i, src)];
            self[(i, dst)] += v;
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::Shape(String::from("determinant of a non-square matrix")));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
            }
            prev = m[(k, k)].clone();
        }
        Ok(sign * &m[(n - 1, n - 1)])
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        rational_rank(&self.to_rational())
    }

    pub fn to_rational(&self) -> Vec<Vec<BigRational>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| BigRational::from_integer(self[(i, j)].clone())).collect())
            .collect()
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.data.iter().map(Signed::abs).max().unwrap_or_default()
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("matrix shape mismatch")
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;
    fn neg(self) -> IntMatrix {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
        }
        f.write_str("]")
    }
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &pivot;
                for k in c..ncols {
                    let v = &f * &m[rank][k];
                    m[r][k] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Solves `A x = b` over the rationals for square invertible `A`.
pub fn rational_solve(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, p);
        let pivot = m[c][c].clone();
        for k in c..=n {
            let v = &m[c][k] / &pivot;
            m[c][k] = v;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for k in c..=n {
                    let v = &f * &m[c][k];
                    m[r][k] -= v;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Inverse of a square rational matrix.
pub fn rational_inverse(a: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, p);
        let pivot = m[c][c].clone();
        for k in 0..2 * n {
            let v = &m[c][k] / &pivot;
            m[c][k] = v;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for k in 0..2 * n {
                    let v = &f * &m[c][k];
                    m[r][k] -= v;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_determinant() {
        let m = IntMatrix::from_i64_rows(&[[2, 1, 0], [1, 3, 1], [0, 1, 4]]);
        assert_eq!(m.determinant().unwrap(), BigInt::from(18));
        let u = IntMatrix::from_i64_rows(&[[0, 1], [1, 0]]);
        assert_eq!(u.determinant().unwrap(), BigInt::from(-1));
        let s = IntMatrix::from_i64_rows(&[[1, 2], [2, 4]]);
        assert!(s.determinant().unwrap().is_zero());
    }

    #[test]
    fn product_and_transpose() {
        let a = IntMatrix::from_i64_rows(&[[1, 2, 3], [4, 5, 6]]);
        let b = a.transpose();
        let c = &a * &b;
        assert_eq!(c, IntMatrix::from_i64_rows(&[[14, 32], [32, 77]]));
        assert!(c.is_symmetric());
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn primitive_vectors() {
        let v = ClassVector::from_i64s(&[4, -6, 0]);
        assert_eq!(v.content(), BigInt::from(2));
        assert_eq!(v.primitive(), ClassVector::from_i64s(&[2, -3, 0]));
        assert!(ClassVector::zero(3).primitive().is_zero());
    }
}
