use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::intlin::{ClassVector, IntMatrix};
use crate::{Error, Result};

/// A polynomial in `T1..Tn` with rational coefficients. Exponents are signed
/// so that intermediate Laurent expressions can be represented; most
/// routines expect them to be nonnegative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, BigRational>,
}

impl LaurentPolynomial {
    pub fn zero(nvars: usize) -> Self {
        LaurentPolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::monomial(nvars, c, vec![0; nvars])
    }

    pub fn monomial(nvars: usize, c: BigRational, exps: Vec<i64>) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length");
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// `T_{i+1}` (variables are 0-indexed internally).
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, BigRational::one(), e)
    }

    /// Builds from `(coefficient, exponents)` pairs, merging duplicates.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (BigRational, Vec<i64>)>) -> Self {
        let mut p = Self::zero(nvars);
        for (c, e) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Vec<i64>, c: BigRational) {
        assert_eq!(e.len(), self.nvars, "exponent vector length");
        let entry = self.terms.entry(e).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lexicographic order of exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigRational)> {
        self.terms.iter()
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    /// Exponent vectors, in term order.
    pub fn support(&self) -> Vec<Vec<i64>> {
        self.terms.keys().cloned().collect()
    }

    /// Indices of variables occurring with nonzero exponent.
    pub fn variables(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&i| self.terms.keys().any(|e| e[i] != 0)).collect()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_terms(self.nvars, self.terms.iter().map(|(e, x)| (x * c, e.clone())))
    }

    /// Multiplies by the monomial with exponents `m`.
    pub fn shift(&self, m: &[i64]) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (c.clone(), e.iter().zip(m).map(|(a, b)| a + b).collect()));
        Self::from_terms(self.nvars, terms)
    }

    /// Adds `extra` new variables at the end.
    pub fn extend_vars(&self, extra: usize) -> Self {
        let n = self.nvars + extra;
        let terms = self.terms.iter().map(|(e, c)| {
            let mut e = e.clone();
            e.resize(n, 0);
            (c.clone(), e)
        });
        Self::from_terms(n, terms)
    }

    /// Sets the listed variables to zero.
    pub fn set_zero(&self, vars: &[usize]) -> Self {
        let terms =
            self.terms.iter().filter(|(e, _)| vars.iter().all(|&i| e[i] == 0)).map(|(e, c)| (c.clone(), e.clone()));
        Self::from_terms(self.nvars, terms)
    }

    /// Sets the listed variables to one.
    pub fn set_one(&self, vars: &[usize]) -> Self {
        let terms = self.terms.iter().map(|(e, c)| {
            let mut e = e.clone();
            for &i in vars {
                e[i] = 0;
            }
            (c.clone(), e)
        });
        Self::from_terms(self.nvars, terms)
    }

    /// Entrywise minimum of the exponents: the largest monomial dividing every term.
    pub fn gcd_monomial(&self) -> Vec<i64> {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return vec![0; self.nvars];
        };
        it.fold(first.clone(), |acc, e| acc.iter().zip(e).map(|(a, b)| *a.min(b)).collect())
    }

    /// `Q * e` for each term, in term order.
    pub fn term_degrees(&self, q: &IntMatrix) -> Result<Vec<ClassVector>> {
        if q.cols() != self.nvars {
            return Err(Error::Shape(format!(
                "{} variables but the degree matrix has {} columns",
                self.nvars,
                q.cols()
            )));
        }
        Ok(self.terms.keys().map(|e| q.mul_vec(&ClassVector(e.iter().map(|&x| BigInt::from(x)).collect()))).collect())
    }

    /// The common degree of all terms, if there is one.
    pub fn degree(&self, q: &IntMatrix) -> Result<Option<ClassVector>> {
        let d = self.term_degrees(q)?;
        Ok(match d.split_first() {
            Some((first, rest)) if rest.iter().all(|x| x == first) => Some(first.clone()),
            _ => None,
        })
    }

    /// Total degree with weight one on the listed variables and zero elsewhere.
    pub fn weighted_degrees(&self, vars: &[usize]) -> Vec<i64> {
        self.terms.keys().map(|e| vars.iter().map(|&i| e[i]).sum()).collect()
    }

    /// Divides by the leading coefficient sign so the first displayed term is positive.
    pub fn normalize_sign(&self) -> Self {
        match self.terms.iter().next_back() {
            Some((_, c)) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// Parses e.g. `"T7*T8 - T2*T4 + 3/2*T3^2*T6"` in `nvars` variables.
    pub fn parse(s: &str, nvars: usize) -> Result<Self> {
        parse(s, Some(nvars))
    }
}

impl FromStr for LaurentPolynomial {
    type Err = Error;

    /// The variable count is the largest index that occurs.
    fn from_str(s: &str) -> Result<Self> {
        parse(s, None)
    }
}

fn bad(s: &str, why: &str) -> Error {
    Error::OutOfRange(format!("cannot parse polynomial {s:?}: {why}"))
}

fn parse(s: &str, nvars: Option<usize>) -> Result<LaurentPolynomial> {
    let mut terms: Vec<(BigRational, Vec<(usize, i64)>)> = Vec::new();
    let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return Err(bad(s, "empty"));
    }
    let mut rest = text.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let mut sign = BigRational::one();
        if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        } else if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r;
        } else if !first {
            return Err(bad(s, "expected + or -"));
        }
        first = false;
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let (term, tail) = rest.split_at(end);
        rest = tail;
        if term.is_empty() {
            return Err(bad(s, "empty term"));
        }
        let mut coeff = sign;
        let mut vars = Vec::new();
        for factor in term.split('*') {
            if let Some(v) = factor.strip_prefix('T') {
                let (idx, exp) = match v.split_once('^') {
                    Some((i, e)) => (i, e.parse::<i64>().map_err(|_| bad(s, "bad exponent"))?),
                    None => (v, 1),
                };
                let idx: usize = idx.parse().map_err(|_| bad(s, "bad variable index"))?;
                if idx == 0 {
                    return Err(bad(s, "variables are numbered from T1"));
                }
                if exp < 0 {
                    return Err(bad(s, "negative exponent"));
                }
                vars.push((idx - 1, exp));
            } else {
                let c = match factor.split_once('/') {
                    Some((n, d)) => {
                        let n: BigInt = n.parse().map_err(|_| bad(s, "bad coefficient"))?;
                        let d: BigInt = d.parse().map_err(|_| bad(s, "bad coefficient"))?;
                        if d.is_zero() {
                            return Err(bad(s, "zero denominator"));
                        }
                        BigRational::new(n, d)
                    }
                    None => BigRational::from_integer(factor.parse().map_err(|_| bad(s, "bad factor"))?),
                };
                coeff *= c;
            }
        }
        terms.push((coeff, vars));
    }
    let max = terms.iter().flat_map(|(_, v)| v.iter().map(|(i, _)| i + 1)).max().unwrap_or(0);
    let n = match nvars {
        Some(n) if n < max => return Err(bad(s, &format!("uses T{max} but only {n} variables"))),
        Some(n) => n,
        None => max,
    };
    Ok(LaurentPolynomial::from_terms(
        n,
        terms.into_iter().map(|(c, vars)| {
            let mut e = vec![0; n];
            for (i, x) in vars {
                e[i] += x;
            }
            (c, e)
        }),
    ))
}

impl fmt::Display for LaurentPolynomial {
    /// Highest exponent vector first; `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, x)| **x != 0)
                .map(|(i, x)| if *x == 1 { format!("T{}", i + 1) } else { format!("T{}^{}", i + 1, x) })
                .collect();
            if vars.is_empty() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                f.write_str(&vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut p = self.clone();
        for (e, c) in &rhs.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        self.scale(&-BigRational::one())
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &-rhs
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut p = LaurentPolynomial::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                p.add_term(e1.iter().zip(e2).map(|(a, b)| a + b).collect(), c1 * c2);
            }
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn parse_and_display() {
        let f: LaurentPolynomial = "T7*T8 - T2*T4 + T3*T6".parse().unwrap();
        assert_eq!(f.nvars(), 8);
        assert_eq!(f.len(), 3);
        let g = LaurentPolynomial::parse(&f.to_string(), 8).unwrap();
        assert_eq!(f, g);
        let h = LaurentPolynomial::parse("-2*T1^2 + 1/2 - 3", 2).unwrap();
        assert_eq!(h.to_string(), "-2*T1^2 - 5/2");
    }

    #[test]
    fn parse_errors() {
        assert!(LaurentPolynomial::parse("T0", 3).is_err());
        assert!(LaurentPolynomial::parse("T4", 3).is_err());
        assert!(LaurentPolynomial::parse("T1 +", 3).is_err());
        assert!(LaurentPolynomial::parse("", 3).is_err());
        assert!(LaurentPolynomial::parse("T1^x", 3).is_err());
    }

    #[test]
    fn arithmetic_cancels() {
        let x = LaurentPolynomial::variable(2, 0);
        let y = LaurentPolynomial::variable(2, 1);
        let s = &x + &y;
        let d = &x - &y;
        let p = &s * &d;
        assert_eq!(p, LaurentPolynomial::parse("T1^2 - T2^2", 2).unwrap());
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn degrees() {
        let q = IntMatrix::from_i64_rows(&[[1, 0, 1, 0], [0, 1, 0, 1]]);
        let f = LaurentPolynomial::parse("T1*T2 - T3*T4", 4).unwrap();
        assert_eq!(f.degree(&q).unwrap(), Some(ClassVector::from_i64s(&[1, 1])));
        let g = LaurentPolynomial::parse("T1 - T2", 4).unwrap();
        assert_eq!(g.degree(&q).unwrap(), None);
        assert_eq!(f.gcd_monomial(), vec![0, 0, 0, 0]);
    }
}
