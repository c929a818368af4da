//! Exact integers in JSON, and the output layout.
//!
//! Integers are written as JSON numbers with all their digits; on input,
//! decimal strings are accepted as well.

use anyhow::{anyhow, bail, Context, Result};
use coxk3_core::graded::{GradedPresentation, Relation};
use coxk3_core::k3::{Completeness, PredictionResult};
use coxk3_core::toric::{Fan, LaurentPolynomial};
use coxk3_core::{ClassVector, IntMatrix};
use num_bigint::BigInt;
use serde_json::{json, Value};

pub fn int(x: &BigInt) -> Value {
    Value::Number(x.to_string().parse().expect("integers are JSON numbers"))
}

pub fn vector(v: &ClassVector) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub fn vectors<'a>(vs: impl IntoIterator<Item = &'a ClassVector>) -> Value {
    Value::Array(vs.into_iter().map(vector).collect())
}

pub fn matrix(m: &IntMatrix) -> Value {
    Value::Array(m.row_vecs().iter().map(|r| Value::Array(r.iter().map(int).collect())).collect())
}

pub fn to_int(v: &Value) -> Result<BigInt> {
    let s = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.trim().to_owned(),
        other => bail!("expected an integer, found {other}"),
    };
    s.parse().map_err(|_| anyhow!("not an integer: {s}"))
}

pub fn to_vector(v: &Value) -> Result<ClassVector> {
    let xs = v.as_array().ok_or_else(|| anyhow!("expected a list of integers, found {v}"))?;
    Ok(ClassVector(xs.iter().map(to_int).collect::<Result<_>>()?))
}

pub fn to_matrix(v: &Value) -> Result<IntMatrix> {
    let rows = v.as_array().ok_or_else(|| anyhow!("expected a list of rows, found {v}"))?;
    if rows.is_empty() {
        bail!("empty matrix");
    }
    let rows = rows.iter().map(|r| to_vector(r).map(|c| c.0)).collect::<Result<Vec<_>>>()?;
    Ok(IntMatrix::from_rows(rows)?)
}

pub fn fan(f: &Fan) -> Value {
    json!({ "rays": vectors(f.rays()), "max_cones": f.max_cones() })
}

pub fn to_fan(v: &Value) -> Result<Fan> {
    let rays = v.get("rays").ok_or_else(|| anyhow!("fan needs \"rays\""))?;
    let rays = rays.as_array().ok_or_else(|| anyhow!("\"rays\" must be a list"))?;
    let rays = rays.iter().map(to_vector).collect::<Result<Vec<_>>>()?;
    let cones = v.get("max_cones").ok_or_else(|| anyhow!("fan needs \"max_cones\""))?;
    let cones: Vec<Vec<usize>> =
        serde_json::from_value(cones.clone()).context("\"max_cones\" must be lists of ray indices")?;
    let rank = rays.first().map(ClassVector::dim).ok_or_else(|| anyhow!("fan without rays"))?;
    Ok(Fan::new(rank, rays, cones)?)
}

pub fn presentation(p: &GradedPresentation) -> Value {
    let relations: Vec<Value> = p
        .relations()
        .iter()
        .map(|r| match r {
            Relation::Explicit(f) => json!({ "polynomial": f.to_string() }),
            Relation::Generic { degree, label } => json!({ "degree": vector(degree), "label": label }),
        })
        .collect();
    let degrees = p.relation_degrees().ok().map(|d| vectors(&d));
    json!({ "q": matrix(p.q()), "relations": relations, "relation_degrees": degrees })
}

/// `{"q": [[...]], "relations": [...]}` where a relation is a polynomial
/// string in `T1, ..., Tn`, `{"polynomial": ...}`, or `{"degree": [...], "label": ...}`.
pub fn to_presentation(v: &Value) -> Result<GradedPresentation> {
    let q = to_matrix(v.get("q").ok_or_else(|| anyhow!("presentation needs \"q\""))?)?;
    let n = q.cols();
    let mut relations = Vec::new();
    if let Some(rs) = v.get("relations") {
        let rs = rs.as_array().ok_or_else(|| anyhow!("\"relations\" must be a list"))?;
        for r in rs {
            let poly = r.as_str().or_else(|| r.get("polynomial").and_then(Value::as_str));
            relations.push(match (poly, r.get("degree")) {
                (Some(s), _) => Relation::Explicit(parse_poly(s, n)?),
                (None, Some(d)) => {
                    let label = r.get("label").and_then(Value::as_str).unwrap_or("f");
                    Relation::generic(to_vector(d)?, label)
                }
                _ => bail!("cannot read relation {r}"),
            });
        }
    }
    Ok(GradedPresentation::new(q, relations)?)
}

pub fn parse_poly(s: &str, nvars: usize) -> Result<LaurentPolynomial> {
    LaurentPolynomial::parse(s, nvars).with_context(|| format!("polynomial {s:?}"))
}

pub fn prediction(p: &PredictionResult) -> Value {
    let completeness = match p.completeness {
        Completeness::Exact => "exact",
        Completeness::LowerBound => "lower-bound",
    };
    json!({
        "generator_degrees": vectors(&p.generator_degrees),
        "relation_degrees": vectors(&p.relation_degrees),
        "completeness": completeness,
        "case": p.case,
    })
}

/// Indented JSON with keys sorted and lists of scalars kept on one line,
/// so that vectors and matrix rows print one per line.
pub fn render(v: &Value) -> String {
    let mut out = String::new();
    write(&mut out, v, 0);
    out
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write(out: &mut String, v: &Value, indent: usize) {
    let pad = |out: &mut String, n: usize| out.extend(std::iter::repeat_n(' ', n));
    match v {
        Value::Array(xs) if !xs.iter().all(is_scalar) => {
            out.push_str("[\n");
            for (i, x) in xs.iter().enumerate() {
                pad(out, indent + 2);
                write(out, x, indent + 2);
                out.push_str(if i + 1 < xs.len() { ",\n" } else { "\n" });
            }
            pad(out, indent);
            out.push(']');
        }
        Value::Object(m) if !m.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in m.iter().enumerate() {
                pad(out, indent + 2);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write(out, x, indent + 2);
                out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
            }
            pad(out, indent);
            out.push('}');
        }
        _ => out.push_str(&v.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_integers_round_trip() {
        let x: BigInt = "123456789012345678901234567890".parse().unwrap();
        let v = int(&x);
        assert_eq!(v.to_string(), "123456789012345678901234567890");
        assert_eq!(to_int(&v).unwrap(), x);
        assert_eq!(to_int(&json!("-7")).unwrap(), BigInt::from(-7));
        assert!(to_int(&json!(1.5)).is_err());
    }

    #[test]
    fn layout() {
        let v = json!({ "b": [[1, 0], [0, 1]], "a": 1, "c": [] });
        assert_eq!(render(&v), "{\n  \"a\": 1,\n  \"b\": [\n    [1,0],\n    [0,1]\n  ],\n  \"c\": []\n}");
    }

    #[test]
    fn presentation_round_trip() {
        let v = json!({ "q": [[1, 1, 1, 1]], "relations": ["T1*T2 - T3*T4", { "degree": [3], "label": "g" }] });
        let p = to_presentation(&v).unwrap();
        assert_eq!(p.relations().len(), 2);
        let again = to_presentation(&presentation(&p)).unwrap();
        assert_eq!(again, p);
    }
}
