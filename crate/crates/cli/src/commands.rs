use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use coxk3_core::fixtures::{cover_spec, reference_cover, COVER_CASES};
use coxk3_core::graded::{
    ci_hilbert, count_monomials, presentation_equivalent, standard_monomial_count, GradedPresentation,
    DEFAULT_SPAIR_CAP,
};
use coxk3_core::intlin::gale_dual;
use coxk3_core::k3::{
    adjoin_cover, classification_table, delpezzo_canonical, delpezzo_curves, eff_cone_rank2, h0_rank2, nef_cone_rank2,
    nikulin_counts, polyhedral_rank2, predict_delpezzo_cover, predict_rank2, Branch, CoverSpec, CurveKind,
    RankTwoScenario,
};
use coxk3_core::toric::{admissibility_check, proper_transform, Verdict};
use serde_json::{json, Value};

use crate::input::{load_fan, parse_form, parse_gram, parse_indices, parse_rows, parse_vector, read_json};
use crate::json;
use crate::verify;

pub const SPAIR_CAP_VAR: &str = "COXK3_SPAIR_CAP";

#[derive(Debug, Parser)]
#[command(name = "coxk3", version, about = "Exact Cox ring computations for K3 surfaces and their quotients")]
pub struct Cli {
    /// Print each JSON document on a single line.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Gale dual of a ray matrix (rays as columns).
    Gale {
        /// JSON file holding the matrix as a list of rows.
        #[arg(short, long)]
        input: Option<PathBuf>,
        /// The matrix inline, rows separated by `;`.
        #[arg(long, allow_hyphen_values = true)]
        matrix: Option<String>,
        /// Take the rays of a fan.
        #[arg(long)]
        fan: Option<String>,
    },
    /// Degree matrix and canonical class of a toric variety.
    Cox {
        /// `builtin:NAME` or a fan JSON file.
        #[arg(long)]
        fan: Option<String>,
        #[arg(short, long)]
        input: Option<PathBuf>,
    },
    /// Stellar subdivision of a cone, optionally with the proper transform of a relation.
    Blowup {
        #[arg(long)]
        fan: Option<String>,
        #[arg(short, long)]
        input: Option<PathBuf>,
        /// Ray indices (from 0) of the cone to subdivide.
        #[arg(long)]
        cone: String,
        /// A polynomial in `T1, ..., Tn` on the fan's Cox ring.
        #[arg(long)]
        relation: Option<String>,
    },
    /// Monomial count and dimension of one graded piece.
    Hilbert {
        /// Presentation JSON.
        #[arg(short, long)]
        input: Option<PathBuf>,
        /// Use the Cox ring of a toric variety.
        #[arg(long)]
        fan: Option<String>,
        #[arg(short, long, allow_hyphen_values = true)]
        w: String,
    },
    /// Picard lattices of rank two.
    Rank2 {
        #[arg(long, allow_hyphen_values = true)]
        gram: Option<String>,
        #[arg(long)]
        form: Option<String>,
        /// Predicted generator and relation degrees.
        #[arg(long)]
        predict: bool,
        /// Number of sections of this class.
        #[arg(short, long, allow_hyphen_values = true)]
        w: Option<String>,
    },
    /// Cox ring of a double cover.
    Cover {
        /// One of the reference double covers.
        #[arg(long)]
        case: Option<String>,
        /// Toric base surface.
        #[arg(long)]
        fan: Option<String>,
        /// Base presentation JSON.
        #[arg(short, long)]
        input: Option<PathBuf>,
        /// Canonical class of a base that is not a complete intersection.
        #[arg(long, allow_hyphen_values = true)]
        canonical: Option<String>,
        /// Ray index of a rational branch component (toric base).
        #[arg(long, conflicts_with = "component_class")]
        rational_component: Option<usize>,
        /// Class of a rational branch component.
        #[arg(long, allow_hyphen_values = true)]
        component_class: Option<String>,
    },
    /// Lines, conics and the Cox ring of the double cover of a del Pezzo surface.
    Dp {
        /// Picard number, 5 to 9.
        #[arg(short, long)]
        k: usize,
    },
    /// Fixed lattices, quotient surfaces and branch curves.
    Table {
        #[arg(long)]
        rho: usize,
    },
    /// Number of Picard lattices with polyhedral effective cone.
    Nikulin {
        #[arg(long)]
        rho: Option<usize>,
    },
    /// Homogeneity and canonical class of a presentation.
    Validate {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Recompute the published matrices, dimensions and counts.
    VerifyPaper {
        #[arg(long)]
        case: Option<String>,
    },
}

/// The documents to print, and whether the checks they report passed.
#[derive(Debug)]
pub struct Output {
    pub documents: Vec<Value>,
    pub ok: bool,
    /// One compact document per line.
    pub stream: bool,
}

impl Output {
    fn one(v: Value) -> Self {
        Output { documents: vec![v], ok: true, stream: false }
    }

    fn checked(v: Value, ok: bool) -> Self {
        Output { documents: vec![v], ok, stream: false }
    }
}

pub fn spair_cap() -> Result<usize> {
    match std::env::var(SPAIR_CAP_VAR) {
        Ok(s) => s.trim().parse().map_err(|_| anyhow!("{SPAIR_CAP_VAR} must be a non-negative integer, got {s:?}")),
        Err(_) => Ok(DEFAULT_SPAIR_CAP),
    }
}

fn fan_source(fan: &Option<String>, input: &Option<PathBuf>) -> Result<coxk3_core::toric::Fan> {
    match (fan, input) {
        (Some(f), None) => load_fan(f),
        (None, Some(p)) => load_fan(&p.to_string_lossy()),
        _ => bail!("give exactly one of --fan and --input"),
    }
}

pub fn run(command: &Command) -> Result<Output> {
    match command {
        Command::Gale { input, matrix, fan } => {
            let p = match (input, matrix, fan) {
                (Some(path), None, None) => json::to_matrix(&read_json(path)?)?,
                (None, Some(m), None) => parse_rows(m)?,
                (None, None, Some(f)) => load_fan(f)?.ray_matrix(),
                _ => bail!("give exactly one of --input, --matrix and --fan"),
            };
            let q = gale_dual(&p)?;
            Ok(Output::one(json!({ "p": json::matrix(&p), "q": json::matrix(&q) })))
        }
        Command::Cox { fan, input } => {
            let fan = fan_source(fan, input)?;
            let cox = fan.cox_construction()?;
            Ok(Output::one(json!({
                "fan": json::fan(&fan),
                "complete": fan.is_complete(),
                "q": json::matrix(&cox.q),
                "variables": cox.variables,
                "canonical_class": json::vector(&cox.canonical_class()),
            })))
        }
        Command::Blowup { fan, input, cone, relation } => {
            let fan = fan_source(fan, input)?;
            let cone = parse_indices(cone)?;
            let blown = fan.stellar_subdivide(&cone)?;
            let q = blown.cox_construction()?.q;
            let mut out = json!({
                "fan": json::fan(&blown),
                "new_ray": json::vector(blown.rays().last().expect("a new ray")),
                "q": json::matrix(&q),
            });
            let mut ok = true;
            if let Some(r) = relation {
                let f0 = json::parse_poly(r, fan.rays().len())?;
                let adm = admissibility_check(&f0, &cone);
                let verdict = adm.verdict();
                ok = verdict.is_pass();
                out["admissibility"] = json!({
                    "verdict": verdict_json(&verdict),
                    "lowest_part": adm.lowest_part.to_string(),
                    "irreducible": verdict_json(&adm.irreducible),
                    "meets_orbit": verdict_json(&adm.meets_orbit),
                });
                out["proper_transform"] = json!(proper_transform(&f0, &cone).to_string());
            }
            Ok(Output::checked(out, ok))
        }
        Command::Hilbert { input, fan, w } => {
            let pres = match (input, fan) {
                (Some(p), None) => json::to_presentation(&read_json(p)?)?,
                (None, Some(f)) => GradedPresentation::polynomial_ring(load_fan(f)?.cox_construction()?.q),
                _ => bail!("give exactly one of --input and --fan"),
            };
            let w = parse_vector(w)?;
            if w.dim() != pres.grading_rank() {
                bail!("degree {w} has {} entries, the grading has rank {}", w.dim(), pres.grading_rank());
            }
            let monomials = count_monomials(pres.q(), &w)?;
            let (dimension, method) = if pres.relations().is_empty() {
                (json::int(&monomials.clone().into()), "polynomial ring")
            } else if !pres.has_generic_relations() {
                let n = standard_monomial_count(&pres, &w, spair_cap()?)?;
                (json::int(&n.into()), "standard monomials")
            } else if pres.is_complete_intersection() {
                (json::int(&ci_hilbert(&pres, &w)?), "complete intersection")
            } else {
                (Value::Null, "unknown: generic relations outside a complete intersection")
            };
            Ok(Output::one(json!({
                "degree": json::vector(&w),
                "monomials": json::int(&monomials.into()),
                "dimension": dimension,
                "method": method,
            })))
        }
        Command::Rank2 { gram, form, predict, w } => {
            let g = match (gram, form) {
                (Some(s), None) => parse_gram(s)?,
                (None, Some(s)) => parse_form(s)?,
                _ => bail!("give exactly one of --gram and --form"),
            };
            let s = RankTwoScenario::new(g.clone())?;
            let poly = polyhedral_rank2(&g)?;
            let (witness, square) = match poly.witness() {
                Some((w, t)) => (json::vector(w), json::int(t)),
                None => (Value::Null, Value::Null),
            };
            let cone = |c: coxk3_core::Result<coxk3_core::cones::Cone>| {
                c.map_or(Value::Null, |c| json::vectors(&c.generators()))
            };
            let mut out = json!({
                "gram": json::matrix(g.gram()),
                "polyhedral": poly.polyhedral,
                "witness": witness,
                "witness_square": square,
                "effective_cone": cone(eff_cone_rank2(&s)),
                "nef_cone": cone(nef_cone_rank2(&s)),
            });
            if *predict {
                let p = predict_rank2(&s)?;
                out["prediction"] = json::prediction(&p);
                out["provenance"] = json!(format!("rank-two Cox ring generators: {}", p.case));
            }
            if let Some(w) = w {
                let w = parse_vector(w)?;
                out["degree"] = json::vector(&w);
                out["h0"] = json::int(&h0_rank2(&s, &w)?.into());
            }
            Ok(Output::one(out))
        }
        Command::Cover { case, fan, input, canonical, rational_component, component_class } => {
            cover(case.as_deref(), fan, input, canonical, *rational_component, component_class)
        }
        Command::Dp { k } => {
            let lines = delpezzo_curves(*k, CurveKind::Lines)?;
            let conics = delpezzo_curves(*k, CurveKind::Conics)?;
            let p = predict_delpezzo_cover(*k)?;
            let curves = |c: &coxk3_core::k3::Curves| json!({ "count": c.classes.len(), "classes": json::vectors(&c.classes), "degree_bound": [c.degree_bound.0, c.degree_bound.1] });
            Ok(Output::one(json!({
                "k": k,
                "canonical_class": json::vector(&delpezzo_canonical(*k)),
                "lines": curves(&lines),
                "conics": curves(&conics),
                "prediction": json::prediction(&p),
                "provenance": "double cover of a del Pezzo surface branched along a smooth curve in |-2K|",
            })))
        }
        Command::Table { rho } => {
            let rows: Vec<Value> = classification_table(*rho)?
                .iter()
                .map(|r| {
                    json!({
                        "lattice": r.lattice,
                        "gram": json::matrix(r.form.gram()),
                        "invariants": { "rank": r.invariants.rank, "a": r.invariants.a, "delta": r.invariants.delta },
                        "quotient": r.quotient,
                        "k_squared": r.k_squared,
                        "rational_component": r.rational_component.map(|(c2, ck)| json!({ "self_intersection": c2, "canonical_degree": ck })),
                        "branch": r.branch,
                        "branch_genus": json::int(&r.branch_genus),
                    })
                })
                .collect();
            Ok(Output::one(json!({
                "rho": rho,
                "rows": rows,
                "provenance": "quotients of K3 surfaces by non-symplectic involutions with 2-elementary fixed lattice",
            })))
        }
        Command::Nikulin { rho } => {
            let provenance = "hyperbolic lattices of Picard number >= 3 with polyhedral effective cone";
            match rho {
                Some(r) => Ok(Output::one(json!({ "rho": r, "count": nikulin_counts(*r)?, "provenance": provenance }))),
                None => {
                    let counts = (3..=20)
                        .map(|r| Ok(json!({ "rho": r, "count": nikulin_counts(r)? })))
                        .collect::<Result<Vec<_>>>()?;
                    Ok(Output::one(json!({ "counts": counts, "provenance": provenance })))
                }
            }
        }
        Command::Validate { input } => {
            let pres = json::to_presentation(&read_json(input)?)?;
            let report = pres.homogeneity_check();
            let checks: Vec<Value> = report
                .relations
                .iter()
                .map(|c| json!({ "index": c.index, "homogeneous": c.homogeneous, "term_degrees": json::vectors(&c.term_degrees) }))
                .collect();
            let ci = pres.is_complete_intersection();
            let (canonical, ok) = match pres.canonical_class() {
                Ok(k) => (json::vector(&k), report.passed()),
                Err(e) => (json!({ "error": e.to_string() }), report.passed() && !ci),
            };
            Ok(Output::checked(
                json!({
                    "homogeneous": report.passed(),
                    "relations": checks,
                    "complete_intersection": ci,
                    "canonical_class": canonical,
                }),
                ok,
            ))
        }
        Command::VerifyPaper { case } => {
            let reports = verify::run(case.as_deref())?;
            let ok = reports.iter().all(|r| r.status != verify::Status::Fail);
            let documents = reports.iter().map(|r| serde_json::to_value(r).expect("serializable")).collect();
            Ok(Output { documents, ok, stream: true })
        }
    }
}

fn verdict_json(v: &Verdict) -> Value {
    match v {
        Verdict::Pass => json!("pass"),
        Verdict::Fail(r) => json!({ "fail": r }),
        Verdict::Unknown(r) => json!({ "unknown": r }),
    }
}

fn cover(
    case: Option<&str>,
    fan: &Option<String>,
    input: &Option<PathBuf>,
    canonical: &Option<String>,
    rational_component: Option<usize>,
    component_class: &Option<String>,
) -> Result<Output> {
    let spec = match (case, fan, input) {
        (Some(c), None, None) => {
            if !COVER_CASES.contains(&c) {
                bail!("unknown cover case {c:?}; available: {}", COVER_CASES.join(", "));
            }
            cover_spec(c)?
        }
        (None, Some(f), None) => {
            let cox = load_fan(f)?.cox_construction()?;
            let branch = match (rational_component, component_class) {
                (Some(i), _) if i >= cox.q.cols() => bail!("ray index {i} out of range"),
                (Some(i), _) => Branch::RationalComponent(cox.degree(i)),
                (None, Some(c)) => Branch::RationalComponent(parse_vector(c)?),
                (None, None) => Branch::Irreducible,
            };
            CoverSpec::from_complete_intersection(GradedPresentation::polynomial_ring(cox.q), branch)?
        }
        (None, None, Some(p)) => {
            let base = json::to_presentation(&read_json(p)?)?;
            let branch = match component_class {
                Some(c) => Branch::RationalComponent(parse_vector(c)?),
                None => Branch::Irreducible,
            };
            if rational_component.is_some() {
                bail!("--rational-component needs a toric base; use --component-class");
            }
            match canonical {
                Some(k) => CoverSpec { base, base_canonical: parse_vector(k)?, branch },
                None => CoverSpec::from_complete_intersection(base, branch)
                    .context("the base is not a complete intersection; pass --canonical")?,
            }
        }
        _ => bail!("give exactly one of --case, --fan and --input"),
    };
    let provenance = match spec.branch {
        Branch::Irreducible => "double cover branched along an irreducible curve in |-2K|",
        Branch::RationalComponent(_) => "double cover branched along a smooth rational curve and its residual curve",
    };
    let x = adjoin_cover(&spec)?;
    let homogeneous = x.homogeneity_check().passed();
    let canonical = x.canonical_class().ok();
    let mut out = json!({
        "presentation": json::presentation(&x),
        "homogeneous": homogeneous,
        "canonical_class": canonical.as_ref().map(json::vector),
        "provenance": provenance,
    });
    let mut ok = homogeneous && canonical.as_ref().is_none_or(|k| k.is_zero());
    if let Some(c) = case {
        let reference = reference_cover(c)?;
        let equivalent = presentation_equivalent(&x, &reference)?;
        out["reference"] = json::presentation(&reference);
        out["equivalent_to_reference"] = json!(equivalent.is_some());
        ok &= equivalent.is_some();
    }
    Ok(Output::checked(out, ok))
}
