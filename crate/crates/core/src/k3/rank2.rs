//! K3 surfaces of Picard number two: effective cones, section counts and
//! predicted Cox ring generators.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};

use super::{Completeness, PredictionResult};
use crate::cones::Cone;
use crate::intlin::{represents, ClassVector, GramForm, Representation};
use crate::{Error, Result};

/// Bound on fixed-component subtractions in [`h0_rank2`].
const MAX_REDUCTIONS: usize = 100_000;

/// An even form of signature (1,1) on `Z w1 + Z w2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTwoScenario {
    form: GramForm,
}

impl RankTwoScenario {
    pub fn new(form: GramForm) -> Result<Self> {
        if form.rank() != 2 {
            return Err(Error::Shape(format!("rank-two scenario needs a 2x2 form, got rank {}", form.rank())));
        }
        if !form.is_even() {
            return Err(Error::NotEven);
        }
        let sig = form.signature()?;
        if sig != (1, 1) {
            return Err(Error::Unsupported(format!("signature {sig:?}, expected (1, 1)")));
        }
        Ok(RankTwoScenario { form })
    }

    /// The form with `w1^2 = a`, `w1.w2 = b`, `w2^2 = c`.
    pub fn from_entries(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::new(GramForm::from_i64_rows(&[[a, b], [b, c]])?)
    }

    pub fn form(&self) -> &GramForm {
        &self.form
    }

    /// `(w1^2, w1.w2, w2^2)`
    pub fn entries(&self) -> (BigInt, BigInt, BigInt) {
        let g = self.form.gram();
        (g[(0, 0)].clone(), g[(0, 1)].clone(), g[(1, 1)].clone())
    }

    fn small_entries(&self) -> Option<(i64, i64, i64)> {
        let (a, b, c) = self.entries();
        Some((a.to_i64()?, b.to_i64()?, c.to_i64()?))
    }
}

fn v(a: i64, b: i64) -> ClassVector {
    ClassVector::from_i64s(&[a, b])
}

/// The effective cone, for the scenarios where it is known: `w_i^2` in
/// `{0, -2}` with `w1.w2 >= 2`, or `w1^2 = 4, w2^2 = -4, w1.w2 = 0`.
pub fn eff_cone_rank2(s: &RankTwoScenario) -> Result<Cone> {
    match s.small_entries() {
        Some((a, b, c)) if [0, -2].contains(&a) && [0, -2].contains(&c) && b >= 2 => {
            Cone::positive_hull(2, &[v(1, 0), v(0, 1)])
        }
        Some((4, 0, -4)) => Cone::positive_hull(2, &[v(1, 1), v(1, -1)]),
        _ => Err(Error::Unsupported(format!("no known effective cone for {:?}", s.entries()))),
    }
}

/// `h^0(w)` by Riemann-Roch on the nef part, after removing fixed
/// components along negative rays of the effective cone.
pub fn h0_rank2(s: &RankTwoScenario, w: &ClassVector) -> Result<BigUint> {
    let eff = eff_cone_rank2(s)?;
    if w.dim() != 2 {
        return Err(Error::Shape(format!("class {w} is not in a rank-two lattice")));
    }
    if !eff.contains(w) {
        return Err(Error::NotEffective(format!("{w}")));
    }
    let g = &s.form;
    let mut w = w.clone();
    for _ in 0..MAX_REDUCTIONS {
        if w.is_zero() {
            return Ok(BigUint::from(1u8));
        }
        let negative = eff.rays().iter().find(|e| g.square(e).is_negative() && g.pair(&w, e).is_negative());
        if let Some(e) = negative {
            w = &w - e;
            continue;
        }
        if let Some(r) = eff.rays().iter().find(|r| g.pair(&w, r).is_negative()) {
            return Err(Error::Inconsistent(format!("{w} pairs negatively with the non-negative ray {r}")));
        }
        let sq = g.square(&w);
        return if sq.is_positive() {
            Ok((sq / BigInt::from(2) + BigInt::from(2)).to_biguint().expect("positive"))
        } else if sq.is_zero() {
            Ok((w.content() + BigInt::from(1)).to_biguint().expect("positive"))
        } else {
            Err(Error::Inconsistent(format!("nef class {w} with negative square")))
        };
    }
    Err(Error::CapExceeded(format!("{MAX_REDUCTIONS} fixed-component reductions")))
}

/// Whether the effective cone is polyhedral, decided by the existence of a
/// class of square 0 or -2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polyhedrality {
    pub polyhedral: bool,
    /// One entry per target tried, in the order 0, -2.
    pub checks: Vec<Representation>,
}

impl Polyhedrality {
    pub fn witness(&self) -> Option<(&ClassVector, &BigInt)> {
        self.checks.iter().find_map(|r| r.witness.as_ref().map(|w| (w, &r.target)))
    }
}

pub fn polyhedral_rank2(g: &GramForm) -> Result<Polyhedrality> {
    let mut checks = Vec::new();
    for t in [0, -2] {
        let r = represents(g, &BigInt::from(t))?;
        let found = r.witness.is_some();
        checks.push(r);
        if found {
            return Ok(Polyhedrality { polyhedral: true, checks });
        }
    }
    Ok(Polyhedrality { polyhedral: false, checks })
}

fn repeat(v: &ClassVector, n: usize) -> Vec<ClassVector> {
    vec![v.clone(); n]
}

/// Predicted generator and relation degrees of the Cox ring.
pub fn predict_rank2(s: &RankTwoScenario) -> Result<PredictionResult> {
    let unsupported = || Error::Unsupported(format!("no prediction for {:?}", s.entries()));
    let (a, b, c) = s.small_entries().ok_or_else(unsupported)?;
    let (w1, w2, u) = (v(1, 0), v(0, 1), v(1, 1));
    let result = match (a, b, c) {
        (0, k, 0) if k >= 3 => {
            let n = (k - 2) as usize;
            let gens = [repeat(&w1, 2), repeat(&w2, 2), repeat(&u, n)].concat();
            let rels = if k == 3 { vec![v(3, 3)] } else { repeat(&v(2, 2), (k * (k - 3) / 2) as usize) };
            PredictionResult::new(gens, rels, Completeness::Exact, "isotropic basis")
        }
        (-2, k, 0) if k >= 1 => {
            let mut gens = vec![w1.clone()];
            gens.extend((0..=k / 2).map(|i| v(i, 1)));
            if k > 1 && k % 2 == 1 {
                gens.push(v(k, 2));
            }
            PredictionResult::new(gens, Vec::new(), Completeness::LowerBound, "one (-2)-class")
        }
        (-2, k, -2) if k >= 3 => {
            let mut gens: Vec<ClassVector> = (0..=k / 2).map(|i| v(i, 1)).collect();
            gens.extend((0..=k / 2).map(|i| v(1, i)));
            if k % 2 == 1 {
                gens.push(v(k, 2));
                gens.push(v(2, k));
            }
            PredictionResult::new(gens, Vec::new(), Completeness::LowerBound, "two (-2)-classes")
        }
        (4, 0, -4) => {
            let gens = [repeat(&v(1, 1), 2), repeat(&v(1, -1), 2), repeat(&w1, 4)].concat();
            PredictionResult::new(gens, repeat(&v(2, 0), 4), Completeness::Exact, "index-two effective cone")
        }
        _ => return Err(unsupported()),
    };
    Ok(result)
}

/// Semiample (= nef) cone: the dual of the effective cone under the form.
pub fn nef_cone_rank2(s: &RankTwoScenario) -> Result<Cone> {
    eff_cone_rank2(s)?.dual_under_form(&s.form)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h0(s: &RankTwoScenario, a: i64, b: i64) -> u64 {
        h0_rank2(s, &v(a, b)).unwrap().to_u64().unwrap()
    }

    #[test]
    fn isotropic_basis() {
        for k in 3..=12 {
            let s = RankTwoScenario::from_entries(0, k, 0).unwrap();
            assert_eq!(h0(&s, 1, 0), 2);
            assert_eq!(h0(&s, 0, 1), 2);
            assert_eq!(h0(&s, 1, 1), k as u64 + 2);
            assert_eq!(h0(&s, 2, 2), 4 * k as u64 + 2);
            assert_eq!(h0(&s, 5, 0), 6);
        }
    }

    #[test]
    fn fixed_components() {
        let s = RankTwoScenario::from_entries(-2, 3, -2).unwrap();
        assert_eq!(h0(&s, 3, 3), 11);
        assert_eq!(h0(&s, 5, 5), 27);
        assert_eq!(h0(&s, 1, 0), 1);
        assert_eq!(h0(&s, 4, 0), 1);
        let t = RankTwoScenario::from_entries(-2, 5, 0).unwrap();
        // w1 is a fixed component of 5 w1 + w2: (5w1 + w2).w1 = -5
        assert_eq!(h0(&t, 5, 1), h0(&t, 2, 1));
        assert!(h0_rank2(&t, &v(-1, 1)).is_err());
    }

    #[test]
    fn index_two() {
        let s = RankTwoScenario::from_entries(4, 0, -4).unwrap();
        assert_eq!(h0(&s, 2, 0), 10);
        assert_eq!(h0(&s, 1, 1), 2);
        assert_eq!(eff_cone_rank2(&s).unwrap(), Cone::positive_hull(2, &[v(1, 1), v(1, -1)]).unwrap());
    }

    #[test]
    fn polyhedrality() {
        let p = polyhedral_rank2(&GramForm::u()).unwrap();
        assert!(p.polyhedral);
        assert_eq!(p.witness().unwrap().0, &v(1, 0));
        let q = polyhedral_rank2(&GramForm::from_i64_rows(&[[2, 0], [0, -6]]).unwrap()).unwrap();
        assert!(!q.polyhedral);
        assert_eq!(q.checks.len(), 2);
        let r = polyhedral_rank2(&GramForm::from_i64_rows(&[[2, 1], [1, -2]]).unwrap()).unwrap();
        let (w, t) = r.witness().unwrap();
        assert_eq!(*t, BigInt::from(-2));
        assert_eq!(GramForm::from_i64_rows(&[[2, 1], [1, -2]]).unwrap().square(w), BigInt::from(-2));
    }

    #[test]
    fn predictions() {
        let p = predict_rank2(&RankTwoScenario::from_entries(0, 3, 0).unwrap()).unwrap();
        assert_eq!(p.generator_degrees.len(), 5);
        assert_eq!(p.relation_degrees, vec![v(3, 3)]);
        let p = predict_rank2(&RankTwoScenario::from_entries(0, 5, 0).unwrap()).unwrap();
        assert_eq!((p.generator_degrees.len(), p.relation_degrees.len()), (7, 5));
        let p = predict_rank2(&RankTwoScenario::from_entries(4, 0, -4).unwrap()).unwrap();
        assert_eq!((p.generator_degrees.len(), p.relation_degrees.len()), (8, 4));
        assert_eq!(p.completeness, Completeness::Exact);
        let p = predict_rank2(&RankTwoScenario::from_entries(-2, 3, -2).unwrap()).unwrap();
        assert_eq!(p.completeness, Completeness::LowerBound);
        assert!(p.generator_degrees.contains(&v(3, 2)) && p.generator_degrees.contains(&v(2, 3)));
        assert!(predict_rank2(&RankTwoScenario::from_entries(2, 3, -2).unwrap()).is_err());
    }

    #[test]
    fn scenario_validation() {
        assert_eq!(RankTwoScenario::from_entries(1, 3, 0), Err(Error::NotEven));
        assert!(RankTwoScenario::from_entries(2, 0, 2).is_err());
        assert!(RankTwoScenario::new(GramForm::u().direct_sum(&GramForm::a1())).is_err());
    }

    #[test]
    fn nef_cones() {
        for k in 3..=8 {
            let s = RankTwoScenario::from_entries(-2, k, 0).unwrap();
            assert_eq!(nef_cone_rank2(&s).unwrap(), Cone::positive_hull(2, &[v(k, 2), v(0, 1)]).unwrap());
            let s = RankTwoScenario::from_entries(-2, k, -2).unwrap();
            assert_eq!(nef_cone_rank2(&s).unwrap(), Cone::positive_hull(2, &[v(k, 2), v(2, k)]).unwrap());
        }
    }
}
