use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;

use coxk3_core::fixtures::hirzebruch;
use coxk3_core::graded::{count_monomials, GradedPresentation};
use coxk3_core::intlin::{ClassVector, GramForm, IntMatrix};
use coxk3_core::k3::*;

fn v(xs: &[i64]) -> ClassVector {
    ClassVector::from_i64s(xs)
}

fn count(degrees: &[ClassVector], w: &ClassVector) -> u64 {
    let q = IntMatrix::from_columns(w.dim(), degrees).unwrap();
    count_monomials(&q, w).unwrap().to_u64().unwrap()
}

fn h0(s: &RankTwoScenario, w: &[i64]) -> u64 {
    h0_rank2(s, &v(w)).unwrap().to_u64().unwrap()
}

#[test]
fn isotropic_basis_relation_counts() {
    for k in 3..=12i64 {
        let s = RankTwoScenario::from_entries(0, k, 0).unwrap();
        let p = predict_rank2(&s).unwrap();
        assert_eq!(h0(&s, &[1, 0]), 2);
        assert_eq!(h0(&s, &[0, 1]), 2);
        assert_eq!(h0(&s, &[1, 1]) as i64, k + 2);
        assert_eq!(h0(&s, &[2, 2]) as i64, 4 * k + 2);
        let excess = count(&p.generator_degrees, &v(&[2, 2])) as i64 - h0(&s, &[2, 2]) as i64;
        assert_eq!(excess, k * (k - 3) / 2, "k = {k}");
        if k == 3 {
            assert_eq!(count(&p.generator_degrees, &v(&[3, 3])) - h0(&s, &[3, 3]), 1);
        }
    }
}

#[test]
fn two_negative_classes_example() {
    let s = RankTwoScenario::from_entries(-2, 3, -2).unwrap();
    let gens = predict_rank2(&s).unwrap().generator_degrees;
    assert_eq!(gens.len(), 6);
    assert_eq!(count(&gens, &v(&[3, 3])), 12);
    assert_eq!(h0(&s, &[3, 3]), 11);
    // at 5u: all monomials, and the subset built from a basis of R_u
    let basis_u = vec![v(&[1, 1]); 3];
    let subset = count(&basis_u, &v(&[5, 5])) + 1 + count(&basis_u, &v(&[2, 2]));
    assert_eq!(subset, 28);
    assert_eq!(count(&gens, &v(&[5, 5])), 34);
    assert_eq!(h0(&s, &[5, 5]), 27);
}

#[test]
fn index_two_effective_cone() {
    let s = RankTwoScenario::from_entries(4, 0, -4).unwrap();
    let p = predict_rank2(&s).unwrap();
    let monomials = count(&p.generator_degrees, &v(&[2, 0]));
    assert_eq!((monomials, h0(&s, &[2, 0])), (14, 10));
    assert_eq!(p.relation_degrees.len() as u64, monomials - 10);
}

/// Lines and conics as Weyl group orbits of `e_n` and `h - e_1`.
fn weyl_orbit(k: usize, seed: ClassVector) -> BTreeSet<ClassVector> {
    let g = delpezzo_form(k);
    let n = k - 1;
    let mut roots = Vec::new();
    let mut a0 = vec![0i64; k];
    a0[0] = 1;
    a0[1..4].iter_mut().for_each(|x| *x = -1);
    roots.push(v(&a0));
    for i in 1..n {
        let mut a = vec![0i64; k];
        a[i] = 1;
        a[i + 1] = -1;
        roots.push(v(&a));
    }
    let mut seen = BTreeSet::from([seed.clone()]);
    let mut queue = VecDeque::from([seed]);
    while let Some(x) = queue.pop_front() {
        for a in &roots {
            // reflection in a root of square -2
            let y = &x + &a.scale(&g.pair(&x, a));
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

#[test]
fn del_pezzo_curves_match_weyl_orbits() {
    for k in 5..=9 {
        let mut e = vec![0i64; k];
        e[k - 1] = 1;
        let lines = delpezzo_curves(k, CurveKind::Lines).unwrap().classes;
        assert_eq!(lines.iter().cloned().collect::<BTreeSet<_>>(), weyl_orbit(k, v(&e)), "k = {k}");
        let mut c = vec![0i64; k];
        c[0] = 1;
        c[1] = -1;
        let conics = delpezzo_curves(k, CurveKind::Conics).unwrap().classes;
        assert_eq!(conics.iter().cloned().collect::<BTreeSet<_>>(), weyl_orbit(k, v(&c)), "k = {k}");
    }
    let counts: Vec<usize> = (5..=9).map(|k| delpezzo_curves(k, CurveKind::Lines).unwrap().classes.len()).collect();
    assert_eq!(counts, [10, 16, 27, 56, 240]);
}

#[test]
fn del_pezzo_relations_are_quadratic() {
    for k in 5..=9 {
        let p = predict_delpezzo_cover(k).unwrap();
        let lines = delpezzo_curves(k, CurveKind::Lines).unwrap().classes.len();
        assert_eq!(p.generator_degrees.len(), lines + 1 + usize::from(k == 9));
        let gens: BTreeSet<&ClassVector> = p.generator_degrees.iter().collect();
        for r in &p.relation_degrees {
            assert!(gens.iter().any(|g| gens.contains(&(r - g))), "k = {k}: {r}");
        }
    }
}

#[test]
fn table_invariants_are_distinct() {
    for rho in 2..=5 {
        let rows = classification_table(rho).unwrap();
        let invariants: BTreeSet<_> =
            rows.iter().map(|r| (r.invariants.rank, r.invariants.a, r.invariants.delta)).collect();
        assert_eq!(invariants.len(), rows.len());
    }
}

fn brute_force(g: &GramForm, bound: i64) -> Option<ClassVector> {
    for x in -bound..=bound {
        for y in -bound..=bound {
            let w = v(&[x, y]);
            if (x, y) != (0, 0) && [BigInt::from(0), BigInt::from(-2)].contains(&g.square(&w)) {
                return Some(w);
            }
        }
    }
    None
}

fn even_hyperbolic() -> impl Strategy<Value = GramForm> {
    (-5i64..=5, -10i64..=10, -5i64..=5)
        .prop_filter("signature (1,1)", |&(a, b, c)| 4 * a * c - b * b < 0)
        .prop_map(|(a, b, c)| GramForm::from_i64_rows(&[[2 * a, b], [b, 2 * c]]).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn polyhedrality_agrees_with_search(g in even_hyperbolic()) {
        let p = polyhedral_rank2(&g).unwrap();
        if let Some((w, t)) = p.witness() {
            prop_assert_eq!(&g.square(w), t);
            prop_assert!(!w.is_zero());
        }
        if brute_force(&g, 50).is_some() {
            prop_assert!(p.polyhedral);
        }
        if !p.polyhedral {
            prop_assert!(brute_force(&g, 50).is_none());
        }
    }

    #[test]
    fn single_section_only_for_negative_classes(k in 2i64..12, a in 0i64..8, b in 0i64..8, case in 0usize..3) {
        let (x, y) = [(0, 0), (-2, 0), (-2, -2)][case];
        prop_assume!(case != 2 || k >= 3);
        let s = RankTwoScenario::from_entries(x, k, y).unwrap();
        let w = v(&[a, b]);
        let h = h0_rank2(&s, &w).unwrap();
        if h == 1u8.into() && !w.is_zero() {
            prop_assert!(s.form().square(&w) < BigInt::from(0));
        }
    }

    #[test]
    fn effective_cone_is_dual_of_nef(k in 2i64..12, case in 0usize..4) {
        let (x, y) = [(0, 0), (-2, 0), (-2, -2), (0, -2)][case];
        prop_assume!(case != 2 || k >= 3);
        let s = RankTwoScenario::from_entries(x, k, y).unwrap();
        let eff = eff_cone_rank2(&s).unwrap();
        let nef = nef_cone_rank2(&s).unwrap();
        prop_assert!(nef.dual_under_form(s.form()).unwrap().contains_cone(&eff));
        prop_assert!(eff.contains_cone(&nef));
    }

    #[test]
    fn covers_of_hirzebruch_surfaces_are_k3(a in 0i64..8) {
        let q = hirzebruch(a).cox_construction().unwrap().q;
        let spec = CoverSpec::from_complete_intersection(GradedPresentation::polynomial_ring(q), Branch::Irreducible).unwrap();
        let x = adjoin_cover(&spec).unwrap();
        prop_assert!(x.homogeneity_check().passed());
        prop_assert!(x.canonical_class().unwrap().is_zero());
    }
}
