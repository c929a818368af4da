//! Recomputes the published matrices, dimensions and counts and compares
//! them with the printed values.

use std::collections::{BTreeSet, VecDeque};

use anyhow::{bail, Result};
use coxk3_core::cones::Cone;
use coxk3_core::fixtures::*;
use coxk3_core::graded::{count_monomials, presentation_equivalent, GradedPresentation, Relation};
use coxk3_core::intlin::{gale_dual, unimodular_row_equivalent, GramForm};
use coxk3_core::k3::*;
use coxk3_core::toric::{admissibility_check, embed_hypersurface, proper_transform};
use coxk3_core::{ClassVector, IntMatrix};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The printed value is wrong in a documented, exactly checked way.
    Deviation,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub case: String,
    pub criterion: u8,
    pub status: Status,
    pub expected: Value,
    pub actual: Value,
    pub citation: String,
}

/// Cases whose printed data are known to be inconsistent.
pub const DEVIATIONS: [&str; 2] = ["cover-rho5-i", "cover-rho5-ii"];

pub struct Case {
    pub id: &'static str,
    pub criterion: u8,
    pub citation: &'static str,
    run: fn(&Case) -> Result<Vec<VerificationReport>>,
}

impl Case {
    fn report(&self, suffix: Option<String>, status: Status, expected: Value, actual: Value) -> VerificationReport {
        let case = match suffix {
            Some(s) => format!("{}/{s}", self.id),
            None => self.id.to_owned(),
        };
        let status = match status {
            Status::Deviation if !DEVIATIONS.contains(&self.id) => Status::Fail,
            s => s,
        };
        VerificationReport {
            case,
            criterion: self.criterion,
            status,
            expected,
            actual,
            citation: self.citation.to_owned(),
        }
    }

    fn compare(&self, suffix: Option<String>, expected: Value, actual: Value) -> VerificationReport {
        let status = if expected == actual { Status::Pass } else { Status::Fail };
        self.report(suffix, status, expected, actual)
    }
}

fn pass_if(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

pub const CASES: &[Case] = &[
    Case { id: "toric-degrees", criterion: 1, citation: "degree matrices of F0, F4 and Bl2(F4)", run: toric_degrees },
    Case {
        id: "blowup-pipeline",
        criterion: 2,
        citation: "Cox ring of Bl3(F4) via an ambient blow-up",
        run: blowup_pipeline,
    },
    Case { id: "cover-rho2-i", criterion: 3, citation: "double cover of F0", run: cover },
    Case {
        id: "cover-rho2-ii",
        criterion: 3,
        citation: "double cover of F4 with rational branch component",
        run: cover,
    },
    Case { id: "cover-rho2-iii", criterion: 3, citation: "double cover of Bl1(P2)", run: cover },
    Case { id: "cover-rho3-i", criterion: 3, citation: "double cover of Bl1(F0)", run: cover },
    Case {
        id: "cover-rho3-ii",
        criterion: 3,
        citation: "double cover of Bl1(F4) with rational branch component",
        run: cover,
    },
    Case { id: "cover-rho4-i", criterion: 3, citation: "double cover of Bl2(F0)", run: cover },
    Case {
        id: "cover-rho4-ii",
        criterion: 3,
        citation: "double cover of Bl2(F4) with rational branch component",
        run: cover,
    },
    Case {
        id: "cover-rho5-i",
        criterion: 3,
        citation: "double cover of the quintic del Pezzo surface",
        run: cover_rho5_i,
    },
    Case {
        id: "cover-rho5-ii",
        criterion: 4,
        citation: "double cover of Bl3(F4) with rational branch component",
        run: cover_rho5_ii,
    },
    Case { id: "gen2-dims", criterion: 5, citation: "rank two, isotropic basis with w1.w2 = k", run: gen2_dims },
    Case {
        id: "two-negative-dims",
        criterion: 6,
        citation: "rank two example with w1^2 = w2^2 = -2, w1.w2 = 3",
        run: two_negative_dims,
    },
    Case { id: "index-two-dims", criterion: 7, citation: "rank two, Gram matrix diag(4, -4)", run: index_two_dims },
    Case { id: "nef-cones", criterion: 8, citation: "nef cones with one and two (-2)-classes", run: nef_cones },
    Case {
        id: "classification-table",
        criterion: 9,
        citation: "quotient surfaces and branch curves for Picard number 2 to 5",
        run: table,
    },
    Case {
        id: "polyhedrality",
        criterion: 10,
        citation: "rank two: polyhedral iff a class of square 0 or -2 exists",
        run: polyhedrality,
    },
    Case { id: "delpezzo", criterion: 11, citation: "double covers of del Pezzo surfaces", run: delpezzo },
    Case { id: "nikulin", criterion: 12, citation: "numbers of lattices with polyhedral effective cone", run: nikulin },
];

/// Runs every case, or those selected by `filter`: a case id, or a case id
/// followed by `/` and a sub-case. Reports are ordered by case.
pub fn run(filter: Option<&str>) -> Result<Vec<VerificationReport>> {
    let selected: Vec<&Case> = match filter {
        None => CASES.iter().collect(),
        Some(f) => {
            let group = f.split('/').next().unwrap_or(f);
            let found: Vec<&Case> = CASES.iter().filter(|c| c.id == group).collect();
            if found.is_empty() {
                let ids: Vec<&str> = CASES.iter().map(|c| c.id).collect();
                bail!("unknown case {f:?}; available: {}", ids.join(", "));
            }
            found
        }
    };
    let mut reports = Vec::new();
    for case in selected {
        reports.extend((case.run)(case)?);
    }
    if let Some(f) = filter.filter(|f| f.contains('/')) {
        reports.retain(|r| r.case == f);
        if reports.is_empty() {
            bail!("no sub-case {f:?}");
        }
    }
    Ok(reports)
}

fn v(xs: &[i64]) -> ClassVector {
    ClassVector::from_i64s(xs)
}

fn toric_degrees(case: &Case) -> Result<Vec<VerificationReport>> {
    let printed = [
        ("F0", IntMatrix::from_i64_rows(&[[1, 0, 1, 0], [0, 1, 0, 1]])),
        // T1 is the negative section, in fan order
        ("F4", IntMatrix::from_i64_rows(&[[0, 1, 0, 1], [1, 0, 1, 4]])),
        ("Bl2F4", bl2f4_degrees()),
    ];
    let mut out = Vec::new();
    for (name, expected) in printed {
        let q = builtin_fan(name).expect("builtin").cox_construction()?.q;
        let ok = unimodular_row_equivalent(&q, &expected)?;
        out.push(case.report(Some(name.into()), pass_if(ok), json::matrix(&expected), json::matrix(&q)));
    }
    Ok(out)
}

fn blowup_pipeline(case: &Case) -> Result<Vec<VerificationReport>> {
    let q = builtin_fan("Bl2F4").expect("builtin").cox_construction()?.q;
    let pres = GradedPresentation::new(q, vec![Relation::Explicit(bl2f4_embedding_section())])?;
    let (q0, f0) = embed_hypersurface(&pres)?;
    let p0 = sigma0_rays();
    let ambient = (&q0 * &p0.transpose()).is_zero() && unimodular_row_equivalent(&q0, &gale_dual(&p0)?)?;
    let admissible = admissibility_check(&f0, &SIGMA0_BLOWN_CONE).verdict().is_pass();
    let sigma1 = sigma0().stellar_subdivide(&SIGMA0_BLOWN_CONE)?;
    let q1 = sigma1.cox_construction()?.q;
    let f1 = proper_transform(&f0, &SIGMA0_BLOWN_CONE).normalize_sign();
    let expected_f1 = bl3f4_relation().normalize_sign();
    let ok = ambient
        && admissible
        && unimodular_row_equivalent(&q1, &bl3f4_degrees())?
        && f1 == expected_f1
        && GradedPresentation::new(q1.clone(), vec![Relation::Explicit(f1.clone())])?.homogeneity_check().passed();
    Ok(vec![case.report(
        None,
        pass_if(ok),
        json!({ "q1": json::matrix(&bl3f4_degrees()), "relation": expected_f1.to_string() }),
        json!({
            "q1": json::matrix(&q1),
            "relation": f1.to_string(),
            "embedding": f0.to_string(),
            "ambient_degrees_match_rays": ambient,
            "admissible": admissible,
            "new_ray": json::vector(sigma1.rays().last().expect("new ray")),
        }),
    )])
}

fn cover(case: &Case) -> Result<Vec<VerificationReport>> {
    let name = case.id.trim_start_matches("cover-");
    let computed = adjoin_cover(&cover_spec(name)?)?;
    let reference = reference_cover(name)?;
    let equivalent = presentation_equivalent(&computed, &reference)?;
    let ok = equivalent.is_some()
        && computed.homogeneity_check().passed()
        && computed.canonical_class().is_ok_and(|k| k.is_zero());
    let mut actual = json::presentation(&computed);
    if let Some(e) = equivalent {
        actual["basis_change"] = json::matrix(&e.u);
        actual["generator_matching"] = json!(e.permutation);
    }
    Ok(vec![case.report(None, pass_if(ok), json::presentation(&reference), actual)])
}

/// The printed root of the branch section has degree `K` instead of `-K`.
fn cover_rho5_i(case: &Case) -> Result<Vec<VerificationReport>> {
    let computed = adjoin_cover(&cover_spec("rho5-i")?)?;
    let reference = reference_cover("rho5-i")?;
    let lines: Vec<usize> = (0..10).collect();
    let t11 = computed.q().col(10);
    let printed = reference.q().col(10);
    let two = BigInt::from(2);
    let degrees = computed.relation_degrees()?;
    let printed_degrees = reference.relation_degrees()?;
    let lines_agree = computed.q().select_columns(&lines) == reference.q().select_columns(&lines);
    let root_relation =
        degrees.last() == Some(&t11.scale(&two)) && printed_degrees.last() == Some(&printed.scale(&two));
    let effective = |w: &ClassVector| count_monomials(&dp5_degrees(), w).map(|n| n > 0u8.into());
    let sign_flip = printed == -&t11 && t11 == -&dp5_canonical();
    let matches = presentation_equivalent(&computed, &reference)?.is_some();
    let status = if matches && computed.homogeneity_check().passed() {
        Status::Pass
    } else if !matches
        && lines_agree
        && root_relation
        && sign_flip
        && computed.homogeneity_check().passed()
        && effective(&degrees[degrees.len() - 1])?
        && !effective(&printed.scale(&two))?
    {
        Status::Deviation
    } else {
        Status::Fail
    };
    Ok(vec![case.report(
        None,
        status,
        json!({ "root_degree": json::vector(&printed), "root_relation_degree": json::vector(&printed.scale(&two)) }),
        json!({
            "root_degree": json::vector(&t11),
            "root_relation_degree": json::vector(&t11.scale(&two)),
            "presentation": json::presentation(&computed),
            "note": "the printed root degree is K; twice it is not effective, so the branch section needs degree -2K and its root -K",
        }),
    )])
}

/// The printed matrix and relation are inconsistent; the computed cover
/// from the blow-up pipeline is homogeneous with trivial canonical class.
fn cover_rho5_ii(case: &Case) -> Result<Vec<VerificationReport>> {
    let computed = adjoin_cover(&cover_spec("rho5-ii")?)?;
    let printed = reference_cover("rho5-ii")?;
    let report = printed.homogeneity_check();
    let failure = report.failures().next();
    let documented = failure.is_some_and(|f| {
        f.index == 0 && f.term_degrees.contains(&v(&[0, 1, 0, 0, 1])) && f.term_degrees.contains(&v(&[0, 1, -1, 2, 0]))
    });
    let computed_ok = computed.homogeneity_check().passed()
        && computed.canonical_class().is_ok_and(|k| k.is_zero())
        && computed.q().col(8) == v(&[1, 2, 0, 2, 1]);
    let printed_canonical = printed.canonical_class();
    let status = match (computed_ok, report.passed(), documented && printed_canonical.is_err()) {
        (true, true, _) => Status::Pass,
        (true, false, true) => Status::Deviation,
        _ => Status::Fail,
    };
    let failures: Vec<Value> = report
        .failures()
        .map(|f| json!({ "relation": f.index, "term_degrees": json::vectors(&f.term_degrees) }))
        .collect();
    Ok(vec![case.report(
        None,
        status,
        json!({
            "presentation": json::presentation(&printed),
            "homogeneity_failures": failures,
            "canonical_class": printed_canonical.map_or_else(|e| json!({ "error": e.to_string() }), |k| json::vector(&k)),
        }),
        json!({
            "presentation": json::presentation(&computed),
            "homogeneous": computed.homogeneity_check().passed(),
            "canonical_class": computed.canonical_class().ok().as_ref().map(json::vector),
        }),
    )])
}

fn monomials(degrees: &[ClassVector], w: &ClassVector) -> Result<BigInt> {
    let q = IntMatrix::from_columns(w.dim(), degrees)?;
    Ok(count_monomials(&q, w)?.into())
}

fn h0(s: &RankTwoScenario, w: &[i64]) -> Result<BigInt> {
    Ok(h0_rank2(s, &v(w))?.into())
}

fn gen2_dims(case: &Case) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for k in 3..=12i64 {
        let s = RankTwoScenario::from_entries(0, k, 0)?;
        let gens = predict_rank2(&s)?.generator_degrees;
        let mut expected = json!({ "h0_w1": 2, "h0_w2": 2, "h0_w1_plus_w2": k + 2, "h0_2u": 4 * k + 2 });
        let mut actual = json!({
            "h0_w1": json::int(&h0(&s, &[1, 0])?),
            "h0_w2": json::int(&h0(&s, &[0, 1])?),
            "h0_w1_plus_w2": json::int(&h0(&s, &[1, 1])?),
            "h0_2u": json::int(&h0(&s, &[2, 2])?),
        });
        if k == 3 {
            expected["relations_3u"] = json!(1);
            actual["relations_3u"] = json::int(&(monomials(&gens, &v(&[3, 3]))? - h0(&s, &[3, 3])?));
        } else {
            expected["relations_2u"] = json!(k * (k - 3) / 2);
            actual["relations_2u"] = json::int(&(monomials(&gens, &v(&[2, 2]))? - h0(&s, &[2, 2])?));
        }
        out.push(case.compare(Some(format!("k={k}")), expected, actual));
    }
    Ok(out)
}

fn two_negative_dims(case: &Case) -> Result<Vec<VerificationReport>> {
    let s = RankTwoScenario::from_entries(-2, 3, -2)?;
    let gens = predict_rank2(&s)?.generator_degrees;
    // at 5u the candidates are Sym^5 of R_u, the product of the two
    // generators of degree 2w1+3w2 and 3w1+2w2, and one of them times
    // (w1) times Sym^2 of R_u
    let r_u = usize::try_from(h0(&s, &[1, 1])?)?;
    let basis_u = vec![v(&[1, 1]); r_u];
    let candidates_5u = monomials(&basis_u, &v(&[5, 5]))? + 1 + monomials(&basis_u, &v(&[2, 2]))?;
    let h3 = h0(&s, &[3, 3])?;
    let h5 = h0(&s, &[5, 5])?;
    let c3 = monomials(&gens, &v(&[3, 3]))?;
    let expected = json!({ "h0_3u": 11, "candidates_3u": 12, "h0_5u": 27, "candidates_5u": 28, "relation_at_3u": true, "relation_at_5u": true });
    let actual = json!({
        "h0_3u": json::int(&h3),
        "candidates_3u": json::int(&c3),
        "h0_5u": json::int(&h5),
        "candidates_5u": json::int(&candidates_5u),
        "relation_at_3u": c3 > h3,
        "relation_at_5u": candidates_5u > h5,
    });
    let mut r = case.compare(None, expected, actual);
    r.actual["all_monomials_5u"] = json::int(&monomials(&gens, &v(&[5, 5]))?);
    Ok(vec![r])
}

fn index_two_dims(case: &Case) -> Result<Vec<VerificationReport>> {
    let s = RankTwoScenario::from_entries(4, 0, -4)?;
    let p = predict_rank2(&s)?;
    let h = h0(&s, &[2, 0])?;
    let m = monomials(&p.generator_degrees, &v(&[2, 0]))?;
    let at_2w1 = p.relation_degrees.iter().filter(|d| **d == v(&[2, 0])).count();
    let expected = json!({ "h0_2w1": 10, "candidates": 14, "relations": 4, "predicted_relations": 4 });
    let actual = json!({
        "h0_2w1": json::int(&h),
        "candidates": json::int(&m),
        "relations": json::int(&(&m - &h)),
        "predicted_relations": at_2w1,
    });
    Ok(vec![case.compare(None, expected, actual)])
}

fn nef_cones(case: &Case) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for k in 3..=8i64 {
        for (name, c, rays) in [("one", 0, [[k, 2], [0, 1]]), ("two", -2, [[k, 2], [2, k]])] {
            let s = RankTwoScenario::from_entries(-2, k, c)?;
            let nef = nef_cone_rank2(&s)?;
            let expected = Cone::positive_hull(2, &rays.map(|r| v(&r)))?;
            let ok = nef.contains_cone(&expected) && expected.contains_cone(&nef);
            out.push(case.report(
                Some(format!("{name}-k={k}")),
                pass_if(ok),
                json::vectors(&expected.generators()),
                json::vectors(&nef.generators()),
            ));
        }
    }
    Ok(out)
}

fn table(case: &Case) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for rho in 2..=5usize {
        let rows = classification_table(rho)?;
        let invariants: BTreeSet<_> =
            rows.iter().map(|r| (r.invariants.rank, r.invariants.a, r.invariants.delta)).collect();
        let k = rho as i64;
        let mut expected: Vec<Value> = vec![json!(["U", 12 - k]), json!(["U(2)", 11 - k])];
        if rho == 2 {
            expected = vec![json!(["F4", 10]), json!(["F0", 9]), json!(["Bl1(P2)", 9])];
        }
        let actual: Vec<Value> = rows
            .iter()
            .map(|r| {
                let label =
                    if rho == 2 { r.quotient.clone() } else { r.lattice.split('+').next().unwrap_or("").to_owned() };
                json!([label, json::int(&r.branch_genus)])
            })
            .collect();
        let ok = invariants.len() == rows.len() && expected == actual;
        let mut actual = json!({ "genera": actual, "invariants": invariants.iter().collect::<Vec<_>>() });
        actual["lattices"] = json!(rows.iter().map(|r| &r.lattice).collect::<Vec<_>>());
        out.push(case.report(
            Some(format!("rho={rho}")),
            pass_if(ok),
            json!({ "genera": expected, "distinct_invariants": true }),
            actual,
        ));
    }
    Ok(out)
}

const SEARCH_BOUND: i64 = 50;
const RANDOM_FORMS: usize = 200;

fn search_zero_or_minus_two(g: &GramForm) -> Option<ClassVector> {
    let targets = [BigInt::from(0), BigInt::from(-2)];
    for x in -SEARCH_BOUND..=SEARCH_BOUND {
        for y in -SEARCH_BOUND..=SEARCH_BOUND {
            let w = v(&[x, y]);
            if (x, y) != (0, 0) && targets.contains(&g.square(&w)) {
                return Some(w);
            }
        }
    }
    None
}

fn random_hyperbolic(rng: &mut ChaCha8Rng) -> Result<GramForm> {
    loop {
        let (a, b, c) = (rng.gen_range(-10..=10i64), rng.gen_range(-20..=20i64), rng.gen_range(-10..=10i64));
        if b * b - 4 * a * c > 0 {
            return Ok(GramForm::from_i64_rows(&[[2 * a, b], [b, 2 * c]])?);
        }
    }
}

fn polyhedrality(case: &Case) -> Result<Vec<VerificationReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b33);
    let (mut agree, mut beyond_bound, mut polyhedral) = (0usize, 0usize, 0usize);
    let mut disagreements = Vec::new();
    for _ in 0..RANDOM_FORMS {
        let g = random_hyperbolic(&mut rng)?;
        let p = polyhedral_rank2(&g)?;
        let witness_ok = p.witness().is_none_or(|(w, t)| !w.is_zero() && &g.square(w) == t);
        let found = search_zero_or_minus_two(&g);
        let ok = witness_ok && p.polyhedral == p.witness().is_some() && (found.is_none() || p.polyhedral);
        polyhedral += usize::from(p.polyhedral);
        if ok {
            agree += 1;
            beyond_bound += usize::from(p.polyhedral && found.is_none());
        } else {
            disagreements.push(json::matrix(g.gram()));
        }
    }
    let diag = polyhedral_rank2(&GramForm::from_i64_rows(&[[2, 0], [0, -6]])?)?.polyhedral;
    let expected = json!({ "agreeing_forms": RANDOM_FORMS, "diag(2,-6)": false });
    let actual = json!({ "agreeing_forms": agree, "diag(2,-6)": diag });
    let mut r = case.compare(None, expected, actual);
    r.actual["polyhedral_forms"] = json!(polyhedral);
    r.actual["witnesses_beyond_search_bound"] = json!(beyond_bound);
    r.actual["disagreements"] = json!(disagreements);
    Ok(vec![r])
}

/// Orbit of `seed` under the reflections in the simple roots
/// `h - e1 - e2 - e3`, `e_i - e_{i+1}`.
fn weyl_orbit(k: usize, seed: ClassVector) -> BTreeSet<ClassVector> {
    let g = delpezzo_form(k);
    let mut roots = Vec::new();
    let mut a0 = vec![0i64; k];
    a0[0] = 1;
    a0[1..4].fill(-1);
    roots.push(v(&a0));
    for i in 1..k - 1 {
        let mut a = vec![0i64; k];
        a[i] = 1;
        a[i + 1] = -1;
        roots.push(v(&a));
    }
    let mut seen = BTreeSet::from([seed.clone()]);
    let mut queue = VecDeque::from([seed]);
    while let Some(x) = queue.pop_front() {
        for a in &roots {
            let y = &x + &a.scale(&g.pair(&x, a));
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

fn delpezzo(case: &Case) -> Result<Vec<VerificationReport>> {
    let classical = [10, 16, 27, 56, 240];
    let mut out = Vec::new();
    for (k, &count) in (5..=9usize).zip(&classical) {
        let mut e = vec![0i64; k];
        e[k - 1] = 1;
        let mut conic = vec![0i64; k];
        conic[0] = 1;
        conic[1] = -1;
        let line_oracle = weyl_orbit(k, v(&e));
        let conic_oracle = weyl_orbit(k, v(&conic));
        let lines = delpezzo_curves(k, CurveKind::Lines)?.classes;
        let conics = delpezzo_curves(k, CurveKind::Conics)?.classes;
        let p = predict_delpezzo_cover(k)?;
        let gens: BTreeSet<&ClassVector> = p.generator_degrees.iter().collect();
        let quadratic = p.relation_degrees.iter().all(|r| gens.iter().any(|g| gens.contains(&(r - *g))));
        let mut expected_relations: Vec<ClassVector> = conic_oracle.iter().cloned().collect();
        expected_relations.push(-&delpezzo_canonical(k).scale(&BigInt::from(2)));
        expected_relations.sort();
        let mut relations = p.relation_degrees.clone();
        relations.sort();
        let expected = json!({
            "lines": count,
            "lines_match_oracle": true,
            "generators": count + 1 + usize::from(k == 9),
            "relations_are_conics_and_minus_2k": true,
            "quadratic_relations": true,
        });
        let actual = json!({
            "lines": lines.len(),
            "lines_match_oracle": lines.iter().cloned().collect::<BTreeSet<_>>() == line_oracle,
            "generators": p.generator_degrees.len(),
            "relations_are_conics_and_minus_2k": relations == expected_relations,
            "quadratic_relations": quadratic,
        });
        let mut r = case.compare(Some(format!("k={k}")), expected, actual);
        r.actual["conics"] = json!(conics.len());
        out.push(r);
    }
    Ok(out)
}

fn nikulin(case: &Case) -> Result<Vec<VerificationReport>> {
    let table: [(usize, u32); 18] = [
        (3, 27),
        (4, 17),
        (5, 10),
        (6, 10),
        (7, 9),
        (8, 12),
        (9, 10),
        (10, 9),
        (11, 4),
        (12, 4),
        (13, 3),
        (14, 3),
        (15, 1),
        (16, 1),
        (17, 1),
        (18, 1),
        (19, 1),
        (20, 0),
    ];
    let expected: Vec<Value> = table.iter().map(|(r, n)| json!([r, n])).collect();
    let actual = table.iter().map(|&(r, _)| Ok(json!([r, nikulin_counts(r)?]))).collect::<Result<Vec<_>>>()?;
    Ok(vec![case.compare(None, json!(expected), json!(actual))])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filters() {
        assert!(run(Some("no-such-case")).is_err());
        let r = run(Some("nikulin")).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].status, Status::Pass);
        let r = run(Some("gen2-dims/k=7")).unwrap();
        assert_eq!(r.len(), 1);
        assert!(run(Some("gen2-dims/k=99")).is_err());
    }

    #[test]
    fn deviations_need_registration() {
        let c = Case { id: "x", criterion: 0, citation: "", run: nikulin };
        assert_eq!(c.report(None, Status::Deviation, Value::Null, Value::Null).status, Status::Fail);
    }

    #[test]
    fn ids_are_unique() {
        let ids: BTreeSet<&str> = CASES.iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), CASES.len());
    }
}
