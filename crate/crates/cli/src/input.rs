//! Command-line argument grammars and input files.

use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use coxk3_core::fixtures::{builtin_fan, BUILTIN_FANS};
use coxk3_core::intlin::GramForm;
use coxk3_core::toric::Fan;
use coxk3_core::{ClassVector, IntMatrix};
use num_bigint::BigInt;
use serde_json::Value;

use crate::json;

/// Integers separated by commas or whitespace.
pub fn parse_ints(s: &str) -> Result<Vec<BigInt>> {
    let xs: Vec<BigInt> = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| anyhow!("not an integer: {t:?}")))
        .collect::<Result<_>>()?;
    if xs.is_empty() {
        bail!("expected at least one integer in {s:?}");
    }
    Ok(xs)
}

pub fn parse_vector(s: &str) -> Result<ClassVector> {
    Ok(ClassVector(parse_ints(s)?))
}

pub fn parse_indices(s: &str) -> Result<Vec<usize>> {
    s.split(',').map(|t| t.trim().parse().map_err(|_| anyhow!("not an index: {t:?}"))).collect()
}

/// Rows separated by `;`, e.g. `"0 3; 3 0"`.
pub fn parse_rows(s: &str) -> Result<IntMatrix> {
    let rows = s.split(';').map(parse_ints).collect::<Result<Vec<_>>>()?;
    Ok(IntMatrix::from_rows(rows)?)
}

pub fn parse_gram(s: &str) -> Result<GramForm> {
    Ok(GramForm::new(parse_rows(s)?)?)
}

/// Orthogonal sums of `U`, `U(n)`, `A1`, `(n)`, each with an optional
/// power: `U(2)+A1^3`.
pub fn parse_form(s: &str) -> Result<GramForm> {
    let mut total: Option<GramForm> = None;
    for term in s.split('+') {
        let term: String = term.chars().filter(|c| !c.is_whitespace()).collect();
        let (base, power) = match term.split_once('^') {
            Some((b, p)) => (b.to_owned(), p.parse::<usize>().map_err(|_| anyhow!("bad power in {term:?}"))?),
            None => (term.clone(), 1),
        };
        if power == 0 {
            bail!("zero power in {term:?}");
        }
        let twist = |inner: &str| -> Result<i64> { inner.parse().map_err(|_| anyhow!("bad scaling in {term:?}")) };
        let form = match base.as_str() {
            "U" => GramForm::u(),
            "A1" => GramForm::a1(),
            b if b.starts_with("U(") && b.ends_with(')') => GramForm::u().twist(twist(&b[2..b.len() - 1])?),
            b if b.starts_with('(') && b.ends_with(')') => GramForm::rank_one(twist(&b[1..b.len() - 1])?),
            _ => bail!("unknown lattice {term:?}; expected U, U(n), A1 or (n)"),
        }
        .power(power);
        total = Some(match total {
            None => form,
            Some(t) => t.direct_sum(&form),
        });
    }
    total.ok_or_else(|| anyhow!("empty lattice"))
}

pub fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

/// `builtin:NAME` or a path to fan JSON.
pub fn load_fan(source: &str) -> Result<Fan> {
    match source.strip_prefix("builtin:") {
        Some(name) => builtin_fan(name)
            .ok_or_else(|| anyhow!("unknown builtin fan {name:?}; available: {}", BUILTIN_FANS.join(", "))),
        None => json::to_fan(&read_json(Path::new(source))?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms() {
        let g = parse_form("U(2) + A1^3").unwrap();
        assert_eq!(g.rank(), 5);
        assert_eq!(g.determinant(), BigInt::from(32));
        assert_eq!(parse_form("(2)+A1").unwrap().determinant(), BigInt::from(-4));
        assert!(parse_form("E8").is_err());
        assert!(parse_form("U^0").is_err());
    }

    #[test]
    fn grams() {
        let g = parse_gram("0 3; 3 0").unwrap();
        assert_eq!(g.determinant(), BigInt::from(-9));
        assert!(parse_gram("0 3; 2 0").is_err());
        assert!(parse_gram("0 x").is_err());
        assert_eq!(parse_vector("2, -1").unwrap(), ClassVector::from_i64s(&[2, -1]));
    }
}
