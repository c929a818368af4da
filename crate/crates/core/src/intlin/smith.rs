use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// `u * m * v == d` with `u`, `v` unimodular and `d` diagonal, the nonzero
/// diagonal entries positive and each dividing the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub d: IntMatrix,
}

impl SmithDecomposition {
    /// The nonzero diagonal entries `d1 | d2 | ...`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d[(i, i)].clone()).take_while(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = m.shape();
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = min_abs_entry(&d, t..rows, t..cols) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -d[(i, t)].div_floor(&d[(t, t)]);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -d[(t, j)].div_floor(&d[(t, t)]);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                // a remainder survived: bring the smallest entry of row/column t to the pivot
                let col_min = min_abs_entry(&d, t..rows, t..t + 1);
                let row_min = min_abs_entry(&d, t..t + 1, t..cols);
                let best = match (col_min, row_min) {
                    (Some(a), Some(b)) => {
                        if d[a].abs() <= d[b].abs() {
                            a
                        } else {
                            b
                        }
                    }
                    (Some(a), None) | (None, Some(a)) => a,
                    (None, None) => unreachable!("pivot is nonzero"),
                };
                d.swap_rows(t, best.0);
                u.swap_rows(t, best.0);
                d.swap_cols(t, best.1);
                v.swap_cols(t, best.1);
                continue;
            }
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !d[(i, j)].is_multiple_of(&d[(t, t)]));
            match bad {
                Some((i, _)) => {
                    let one = BigInt::one();
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithDecomposition { u, v, d }
}

fn min_abs_entry(
    d: &IntMatrix,
    rows: core::ops::Range<usize>,
    cols: core::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            if d[(i, j)].is_zero() {
                continue;
            }
            if best.is_none_or(|b| d[(i, j)].abs() < d[b].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Row-style Hermite normal form: returns `(h, u)` with `u` unimodular,
/// `u * m == h`, `h` in row echelon form with positive pivots and the
/// entries above each pivot reduced into `[0, pivot)`. Zero rows come last.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let (rows, cols) = m.shape();
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let pivot =
                (r..rows).filter(|&i| !h[(i, c)].is_zero()).min_by(|&a, &b| h[(a, c)].abs().cmp(&h[(b, c)].abs()));
            let Some(p) = pivot else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..rows {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = -h[(i, c)].div_floor(&h[(r, c)]);
                h.add_row_multiple(i, r, &q);
                u.add_row_multiple(i, r, &q);
                done &= h[(i, c)].is_zero();
            }
            if done {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = -h[(i, c)].div_floor(&h[(r, c)]);
            if !q.is_zero() {
                h.add_row_multiple(i, r, &q);
                u.add_row_multiple(i, r, &q);
            }
        }
        r += 1;
    }
    (h, u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> SmithDecomposition {
        let s = smith_normal_form(m);
        assert_eq!(&(&s.u * m) * &s.v, s.d);
        assert!(s.u.determinant().unwrap().abs().is_one());
        assert!(s.v.determinant().unwrap().abs().is_one());
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        s
    }

    fn factors(m: &IntMatrix) -> Vec<i64> {
        use num_traits::ToPrimitive;
        check(m).invariant_factors().iter().map(|x| x.to_i64().unwrap()).collect()
    }

    #[test]
    fn diagonal_up_to_sign() {
        assert_eq!(factors(&IntMatrix::from_i64_rows(&[[2, 0], [0, -2]])), [2, 2]);
    }

    #[test]
    fn needs_swaps() {
        assert_eq!(factors(&IntMatrix::from_i64_rows(&[[0, 2], [2, 0]])), [2, 2]);
    }

    #[test]
    fn unimodular_input() {
        assert_eq!(factors(&IntMatrix::from_i64_rows(&[[0, 1], [1, 0]])), [1, 1]);
    }

    #[test]
    fn divisibility_fix_up() {
        // diag(2, 3) has Smith form diag(1, 6)
        assert_eq!(factors(&IntMatrix::from_i64_rows(&[[2, 0], [0, 3]])), [1, 6]);
        assert_eq!(factors(&IntMatrix::from_i64_rows(&[[4, 6, 0], [6, 9, 3]])), [1, 6]);
    }

    #[test]
    fn rectangular_and_zero() {
        assert_eq!(factors(&IntMatrix::zeros(2, 3)), Vec::<i64>::new());
        assert_eq!(factors(&IntMatrix::from_i64_rows(&[[1, 0, -1, 0], [0, 1, 4, -1]])), [1, 1]);
    }

    #[test]
    fn hermite_form_is_echelon() {
        let m = IntMatrix::from_i64_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]);
        let (h, u) = hermite_normal_form(&m);
        assert_eq!(&u * &m, h);
        assert!(u.determinant().unwrap().abs().is_one());
        // upper triangular, positive pivots, entries above a pivot reduced
        for i in 0..3 {
            assert!(h[(i, i)].is_positive());
            for j in 0..i {
                assert!(h[(i, j)].is_zero());
                assert!(!h[(j, i)].is_negative() && h[(j, i)] < h[(i, i)]);
            }
        }
        // |det| is preserved: 2*6*12 up to sign from the original
        assert_eq!(h.determinant().unwrap().abs(), m.determinant().unwrap().abs());
    }
}
