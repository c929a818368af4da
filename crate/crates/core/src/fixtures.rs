//! Fans, degree matrices and relations of the surfaces that occur as
//! quotients of K3 surfaces by non-symplectic involutions, together with
//! the reference presentations of their double covers.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::graded::{GradedPresentation, Relation};
use crate::intlin::{unimodular_transform, ClassVector, IntMatrix};
use crate::k3::{Branch, CoverSpec};
use crate::toric::{proper_transform, Fan, LaurentPolynomial};
use crate::{Error, Result};

/// Rays `(1,0), (0,1), (-1,a), (0,-1)`; the second spans the section of
/// self-intersection `-a`.
pub fn hirzebruch(a: i64) -> Fan {
    Fan::from_i64(&[[1, 0], [0, 1], [-1, a], [0, -1]], &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]]).expect("valid fan")
}

pub fn p2() -> Fan {
    Fan::from_i64(&[[1, 0], [0, 1], [-1, -1]], &[&[0, 1], &[1, 2], &[2, 0]]).expect("valid fan")
}

pub fn bl1_p2() -> Fan {
    p2().stellar_subdivide(&[0, 1]).expect("smooth cone")
}

pub fn bl1_f0() -> Fan {
    hirzebruch(0).stellar_subdivide(&[0, 1]).expect("smooth cone")
}

/// `F0` blown up in two torus fixed points not on a common ruling.
pub fn bl2_f0() -> Fan {
    bl1_f0().stellar_subdivide(&[2, 3]).expect("smooth cone")
}

/// `F4` blown up in a fixed point of the positive section.
pub fn bl1_f4() -> Fan {
    hirzebruch(4).stellar_subdivide(&[0, 3]).expect("smooth cone")
}

/// `F4` blown up in both fixed points of the positive section, with rays
/// ordered `v1, ..., v6` so that `v1` spans the `(-4)`-curve and `v5` the
/// positive section.
pub fn bl2_f4() -> Fan {
    Fan::from_i64(
        &[[0, 1], [1, 0], [-1, 4], [1, -1], [0, -1], [-1, 3]],
        &[&[1, 0], &[0, 2], &[2, 5], &[5, 4], &[4, 3], &[3, 1]],
    )
    .expect("valid fan")
}

/// Index of the ray spanning the `(-4)`-curve in `hirzebruch(4)`-based fans.
pub const F4_NEGATIVE_SECTION: usize = 1;
/// Index of the ray spanning the `(-4)`-curve in [`bl2_f4`].
pub const BL2F4_NEGATIVE_SECTION: usize = 0;

/// The three-dimensional ambient fan of the hypersurface embedding of
/// `Bl3(F4)`: columns of [`sigma0_rays`] with ten maximal cones.
pub fn sigma0() -> Fan {
    let p = sigma0_rays();
    let cones: [[usize; 3]; 10] =
        [[1, 2, 3], [1, 2, 7], [1, 3, 7], [2, 3, 6], [2, 4, 6], [2, 4, 7], [3, 6, 7], [4, 5, 6], [4, 5, 7], [5, 6, 7]];
    let cones = cones.iter().map(|c| c.iter().map(|i| i - 1).collect()).collect();
    Fan::new(3, p.columns(), cones).expect("valid fan")
}

pub fn sigma0_rays() -> IntMatrix {
    IntMatrix::from_i64_rows(&[[0, -1, 1, -1, 0, 1, 0], [0, -1, 0, -1, 0, 0, 1], [-1, -2, -1, -1, 1, 0, -1]])
}

/// Indices of the cone of [`sigma0`] whose subdivision blows up the third point.
pub const SIGMA0_BLOWN_CONE: [usize; 2] = [4, 6];

/// Looks up a fan by name: `F0`/`p1xp1`, `F<a>`, `hirzebruch(<a>)`, `P2`/`p2`,
/// `Bl1P2`, `Bl1F0`, `Bl2F0`, `Bl1F4`, `Bl2F4`, `Sigma0`.
pub fn builtin_fan(name: &str) -> Option<Fan> {
    let fan = match name {
        "F0" | "p1xp1" => hirzebruch(0),
        "P2" | "p2" => p2(),
        "Bl1P2" => bl1_p2(),
        "Bl1F0" => bl1_f0(),
        "Bl2F0" => bl2_f0(),
        "Bl1F4" => bl1_f4(),
        "Bl2F4" => bl2_f4(),
        "Sigma0" => sigma0(),
        _ => {
            let a = name
                .strip_prefix("hirzebruch(")
                .and_then(|s| s.strip_suffix(')'))
                .or_else(|| name.strip_prefix('F'))?;
            hirzebruch(a.trim().parse().ok()?)
        }
    };
    Some(fan)
}

pub const BUILTIN_FANS: [&str; 9] = ["F0", "F4", "P2", "Bl1P2", "Bl1F0", "Bl2F0", "Bl1F4", "Bl2F4", "Sigma0"];

/// Degree matrix of `Bl2(F4)` in the basis used for the blow-up pipeline.
pub fn bl2f4_degrees() -> IntMatrix {
    IntMatrix::from_i64_rows(&[[1, 0, 0, 0, 1, 0], [0, 1, 0, 0, 3, 1], [0, 0, 1, 0, 1, -1], [0, 0, 0, 1, 2, 1]])
}

/// `T2 T4 - T3 T6`: the section whose graph embeds `Bl2(F4)` into the
/// toric variety of [`sigma0`].
pub fn bl2f4_embedding_section() -> LaurentPolynomial {
    LaurentPolynomial::parse("T2*T4 - T3*T6", 6).expect("valid polynomial")
}

/// Degree matrix of `Bl3(F4)`, with relation [`bl3f4_relation`].
pub fn bl3f4_degrees() -> IntMatrix {
    IntMatrix::from_i64_rows(&[
        [1, 0, 0, 0, 0, 0, -1, 1],
        [0, 1, 0, 0, 0, 1, -2, 3],
        [0, 0, 1, 0, 0, -1, -1, 1],
        [0, 0, 0, 1, 0, 1, -1, 2],
        [0, 0, 0, 0, 1, 0, 1, -1],
    ])
}

pub fn bl3f4_relation() -> LaurentPolynomial {
    LaurentPolynomial::parse("T7*T8 - T2*T4 + T3*T6", 8).expect("valid polynomial")
}

/// The Cox ring of `Bl3(F4)` computed from [`sigma0`]: subdivide, take the
/// Gale dual and the proper transform of `T7 - T2 T4 + T3 T6`, and express
/// the grading in the basis of [`bl3f4_degrees`].
pub fn bl3f4_presentation() -> Result<GradedPresentation> {
    let fan = sigma0().stellar_subdivide(&SIGMA0_BLOWN_CONE)?;
    let q1 = fan.cox_construction()?.q;
    let u = unimodular_transform(&q1, &bl3f4_degrees())?
        .ok_or_else(|| Error::Inconsistent(String::from("subdivided fan does not match the reference grading")))?;
    let f0 = LaurentPolynomial::parse("T7 - T2*T4 + T3*T6", 7)?;
    let f1 = proper_transform(&f0, &SIGMA0_BLOWN_CONE);
    GradedPresentation::new(&u * &q1, vec![Relation::Explicit(f1)])
}

/// The five Pluecker relations among the ten `(3x3)`-minors.
pub fn plucker_relations() -> Vec<LaurentPolynomial> {
    [
        "T2*T5 - T3*T6 + T4*T7",
        "T1*T5 - T3*T8 + T4*T9",
        "T1*T6 - T2*T8 + T4*T10",
        "T1*T7 - T2*T9 + T3*T10",
        "T5*T10 - T6*T9 + T7*T8",
    ]
    .iter()
    .map(|s| LaurentPolynomial::parse(s, 10).expect("valid polynomial"))
    .collect()
}

/// Degrees of the ten lines of the quintic del Pezzo surface: `e1, ..., e4`
/// and `h - e_i - e_j` for `ij = 12, 13, 14, 23, 24, 34`.
pub fn dp5_degrees() -> IntMatrix {
    IntMatrix::from_i64_rows(&[
        [0, 0, 0, 0, 1, 1, 1, 1, 1, 1],
        [1, 0, 0, 0, -1, -1, -1, 0, 0, 0],
        [0, 1, 0, 0, -1, 0, 0, -1, -1, 0],
        [0, 0, 1, 0, 0, -1, 0, -1, 0, -1],
        [0, 0, 0, 1, 0, 0, -1, 0, -1, -1],
    ])
}

pub fn dp5_presentation() -> GradedPresentation {
    let rels = plucker_relations().into_iter().map(Relation::Explicit).collect();
    GradedPresentation::new(dp5_degrees(), rels).expect("homogeneous relations")
}

/// `K = -3h + e1 + ... + e4`
pub fn dp5_canonical() -> ClassVector {
    ClassVector::from_i64s(&[-3, 1, 1, 1, 1])
}

/// Names of the reference double covers, by Picard number and case.
pub const COVER_CASES: [&str; 9] =
    ["rho2-i", "rho2-ii", "rho2-iii", "rho3-i", "rho3-ii", "rho4-i", "rho4-ii", "rho5-i", "rho5-ii"];

fn toric_spec(fan: Fan, negative_section: Option<usize>) -> Result<CoverSpec> {
    let cox = fan.cox_construction()?;
    let base = GradedPresentation::polynomial_ring(cox.q.clone());
    let branch = match negative_section {
        Some(i) => Branch::RationalComponent(cox.degree(i)),
        None => Branch::Irreducible,
    };
    CoverSpec::from_complete_intersection(base, branch)
}

/// Base surface and branch data of a reference double cover.
pub fn cover_spec(case: &str) -> Result<CoverSpec> {
    match case {
        "rho2-i" => toric_spec(hirzebruch(0), None),
        "rho2-ii" => toric_spec(hirzebruch(4), Some(F4_NEGATIVE_SECTION)),
        "rho2-iii" => toric_spec(bl1_p2(), None),
        "rho3-i" => toric_spec(bl1_f0(), None),
        "rho3-ii" => toric_spec(bl1_f4(), Some(F4_NEGATIVE_SECTION)),
        "rho4-i" => toric_spec(bl2_f0(), None),
        "rho4-ii" => toric_spec(bl2_f4(), Some(BL2F4_NEGATIVE_SECTION)),
        "rho5-i" => {
            Ok(CoverSpec { base: dp5_presentation(), base_canonical: dp5_canonical(), branch: Branch::Irreducible })
        }
        "rho5-ii" => {
            let base = bl3f4_presentation()?;
            let c1 = base.generator_degrees()[0].clone();
            CoverSpec::from_complete_intersection(base, Branch::RationalComponent(c1))
        }
        _ => Err(Error::OutOfRange(format!("unknown cover case {case}"))),
    }
}

fn with_root(q: IntMatrix, mut relations: Vec<Relation>) -> GradedPresentation {
    let n = q.cols();
    let root = q.col(n - 1);
    relations.push(Relation::generic(root.scale(&2.into()), format!("T{n}^2 - f")));
    GradedPresentation::new(q, relations).expect("consistent reference data")
}

/// The reference Cox ring of a double cover: the printed grading, the
/// printed explicit relations, and the generic relation `T_n^2 - f` in
/// degree twice that of the last generator.
pub fn reference_cover(case: &str) -> Result<GradedPresentation> {
    let m = |rows: &[&[i64]]| {
        IntMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect()).expect("rectangular")
    };
    let p = match case {
        "rho2-i" => with_root(m(&[&[1, 0, 1, 0, 2], &[0, 1, 0, 1, 2]]), vec![]),
        "rho2-ii" => with_root(m(&[&[1, 0, 2, 0, 3], &[0, 1, 4, 1, 6]]), vec![]),
        "rho2-iii" => with_root(m(&[&[1, 0, -1, -1, -1], &[0, 1, 1, 1, 3]]), vec![]),
        "rho3-i" => with_root(m(&[&[1, 0, 0, 1, 0, 2], &[0, 1, 0, 0, 1, 2], &[0, 0, 1, 1, 1, 3]]), vec![]),
        "rho3-ii" => with_root(m(&[&[1, 0, 0, 2, 0, 3], &[0, 1, 0, 1, -1, 1], &[0, 0, 1, 3, 1, 5]]), vec![]),
        "rho4-i" => with_root(
            m(&[&[1, 0, 0, 0, 1, 0, 2], &[0, 1, 0, 0, 0, 1, 2], &[0, 0, 1, 0, 1, 1, 3], &[0, 0, 0, 1, -1, -1, -1]]),
            vec![],
        ),
        "rho4-ii" => with_root(
            m(&[&[1, 0, 0, 0, 2, 0, 3], &[0, 1, 0, 0, 3, 1, 5], &[0, 0, 1, 0, 1, -1, 1], &[0, 0, 0, 1, 2, 1, 4]]),
            vec![],
        ),
        "rho5-i" => {
            let q = dp5_degrees().with_column(&ClassVector::from_i64s(&[-3, 1, 1, 1, 1]))?;
            let rels = plucker_relations().iter().map(|f| Relation::Explicit(f.extend_vars(1))).collect();
            with_root(q, rels)
        }
        "rho5-ii" => {
            let q = m(&[
                &[1, 0, 0, 0, 0, 0, -2, 2, 1],
                &[0, 1, 0, 0, 0, 1, -2, 3, 4],
                &[0, 0, 1, 0, 0, -1, -1, 1, 0],
                &[0, 0, 0, 1, 0, 1, -1, 2, 4],
                &[0, 0, 0, 0, 1, 0, 1, -1, 1],
            ]);
            // printed as is: this relation is not homogeneous for this grading
            let f = LaurentPolynomial::parse("T2*T5 + T4*T6 + T7*T8", 9)?;
            let root = q.col(8).scale(&2.into());
            GradedPresentation::new(q, vec![Relation::Explicit(f), Relation::generic(root, "T9^2 - f")])?
        }
        _ => return Err(Error::OutOfRange(format!("unknown cover case {case}"))),
    };
    Ok(p)
}
