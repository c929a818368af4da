//! Lines and conic classes on del Pezzo surfaces `Bl_{k-1}(P2)` of Picard
//! number `k`, in the basis `(h, e_1, ..., e_{k-1})`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Roots;

use super::{Completeness, PredictionResult};
use crate::intlin::{ClassVector, GramForm, IntMatrix};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveKind {
    /// `E^2 = -1`, `E.K = -1`
    Lines,
    /// `D^2 = 0`, `D.K = -2`
    Conics,
}

impl CurveKind {
    fn square(self) -> i64 {
        match self {
            CurveKind::Lines => -1,
            CurveKind::Conics => 0,
        }
    }

    fn anticanonical_degree(self) -> i64 {
        match self {
            CurveKind::Lines => 1,
            CurveKind::Conics => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curves {
    pub kind: CurveKind,
    /// Sorted.
    pub classes: Vec<ClassVector>,
    /// Range of `h`-coefficients searched: every solution lies in it by
    /// Cauchy-Schwarz on the exceptional coefficients.
    pub degree_bound: (i64, i64),
}

fn check_k(k: usize) -> Result<()> {
    if (5..=9).contains(&k) {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("Picard number {k} outside 5..=9")))
    }
}

/// `diag(1, -1, ..., -1)` of rank `k`.
pub fn delpezzo_form(k: usize) -> GramForm {
    let diag: Vec<BigInt> = (0..k).map(|i| BigInt::from(if i == 0 { 1 } else { -1 })).collect();
    GramForm::new(IntMatrix::diagonal(&diag)).expect("diagonal forms are symmetric")
}

/// `K = -3h + e_1 + ... + e_{k-1}`
pub fn canonical_class(k: usize) -> ClassVector {
    ClassVector((0..k).map(|i| BigInt::from(if i == 0 { -3 } else { 1 })).collect())
}

/// All classes `d h - sum m_i e_i` of the given kind.
pub fn delpezzo_curves(k: usize, kind: CurveKind) -> Result<Curves> {
    check_k(k)?;
    let n = (k - 1) as i64;
    let (s, c) = (kind.square(), kind.anticanonical_degree());
    // sum m = 3d - c, sum m^2 = d^2 - s, and (sum m)^2 <= n sum m^2
    let feasible = |d: i64| (3 * d - c).pow(2) <= n * (d * d - s);
    let (lo, hi) = quadratic_range(9 - n, -6 * c, c * c + n * s);
    let mut classes = Vec::new();
    let mut m = Vec::with_capacity(n as usize);
    for d in lo..=hi {
        if d * d - s < 0 || !feasible(d) {
            continue;
        }
        search(n as usize, 3 * d - c, d * d - s, &mut m, &mut |m| {
            let mut x = vec![BigInt::from(d)];
            x.extend(m.iter().map(|&mi| BigInt::from(-mi)));
            classes.push(ClassVector(x));
        });
    }
    classes.sort();
    Ok(Curves { kind, classes, degree_bound: (lo, hi) })
}

/// Integer interval containing `{d : a d^2 + b d + c <= 0}` for `a > 0`.
fn quadratic_range(a: i64, b: i64, c: i64) -> (i64, i64) {
    let disc = b * b - 4 * a * c;
    if disc < 0 {
        return (0, -1);
    }
    let r = disc.sqrt() + 1;
    ((-b - r).div_euclid(2 * a), (-b + r).div_euclid(2 * a) + 1)
}

/// Calls `emit` for every `m` in `Z^r` with `sum m = sum_target`,
/// `sum m^2 = sq_target`.
fn search(r: usize, sum_target: i64, sq_target: i64, m: &mut Vec<i64>, emit: &mut dyn FnMut(&[i64])) {
    if m.len() == r {
        if sum_target == 0 && sq_target == 0 {
            emit(m);
        }
        return;
    }
    let left = (r - m.len()) as i64;
    if sq_target < 0 || sum_target * sum_target > left * sq_target || (sum_target - sq_target) % 2 != 0 {
        return;
    }
    let b = sq_target.sqrt();
    for x in -b..=b {
        m.push(x);
        search(r, sum_target - x, sq_target - x * x, m, emit);
        m.pop();
    }
}

/// Cox ring degrees of the K3 double cover of a del Pezzo surface of
/// Picard number `k` branched along a smooth curve in `|-2K|`.
pub fn predict_delpezzo_cover(k: usize) -> Result<PredictionResult> {
    let lines = delpezzo_curves(k, CurveKind::Lines)?.classes;
    let conics = delpezzo_curves(k, CurveKind::Conics)?.classes;
    let minus_k = -&canonical_class(k);
    let mut gens = lines;
    gens.push(minus_k.clone());
    if k == 9 {
        // a section of -K not in the span of the lines
        gens.push(minus_k.clone());
    }
    let mut rels = conics;
    rels.push(minus_k.scale(&BigInt::from(2)));
    Ok(PredictionResult::new(gens, rels, Completeness::Exact, "irreducible branch curve"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_counts() {
        let counts: Vec<usize> = (5..=8).map(|k| delpezzo_curves(k, CurveKind::Lines).unwrap().classes.len()).collect();
        assert_eq!(counts, [10, 16, 27, 56]);
    }

    #[test]
    fn defining_equations() {
        for k in 5..=8 {
            let g = delpezzo_form(k);
            let kk = canonical_class(k);
            for kind in [CurveKind::Lines, CurveKind::Conics] {
                for x in delpezzo_curves(k, kind).unwrap().classes {
                    assert_eq!(g.square(&x), BigInt::from(kind.square()));
                    assert_eq!(g.pair(&x, &kk), BigInt::from(-kind.anticanonical_degree()));
                }
            }
        }
    }

    #[test]
    fn conic_counts() {
        let counts: Vec<usize> =
            (5..=7).map(|k| delpezzo_curves(k, CurveKind::Conics).unwrap().classes.len()).collect();
        assert_eq!(counts, [5, 10, 27]);
    }

    #[test]
    fn cover_prediction() {
        let p = predict_delpezzo_cover(7).unwrap();
        assert_eq!(p.generator_degrees.len(), 28);
        assert_eq!(p.relation_degrees.last().unwrap(), &ClassVector::from_i64s(&[6, -2, -2, -2, -2, -2, -2]));
        assert!(predict_delpezzo_cover(4).is_err());
    }

    #[test]
    fn interval() {
        assert!(quadratic_range(1, 0, -4).0 <= -2);
        assert!(quadratic_range(1, 0, -4).1 >= 2);
        assert_eq!(quadratic_range(1, 0, 1), (0, -1));
    }
}
