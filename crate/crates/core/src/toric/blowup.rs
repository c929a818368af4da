//! Proper transforms under stellar subdivision of an ambient toric variety.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::LaurentPolynomial;
use crate::graded::{GradedPresentation, Relation};
use crate::intlin::IntMatrix;
use crate::{Error, Result};

/// `f(T_1 T_inf, ..., T_d T_inf, T_{d+1}, ...) / T_inf^m` for the blown
/// variables `T_i, i in blown`, where `T_inf` is appended as the last variable
/// and `m` is the largest power that divides.
pub fn proper_transform(f0: &LaurentPolynomial, blown: &[usize]) -> LaurentPolynomial {
    let n = f0.nvars();
    let g = f0.extend_vars(1);
    let terms: Vec<(BigRational, Vec<i64>)> = g
        .terms()
        .map(|(e, c)| {
            let mut e = e.clone();
            e[n] = blown.iter().map(|&i| e[i]).sum();
            (c.clone(), e)
        })
        .collect();
    let m = terms.iter().map(|(_, e)| e[n]).min().unwrap_or(0);
    LaurentPolynomial::from_terms(
        n + 1,
        terms.into_iter().map(|(c, mut e)| {
            e[n] -= m;
            (c, e)
        }),
    )
}

/// Outcome of one exact test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(String),
    Unknown(String),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Admissibility {
    /// Lowest part of `f0` when the blown variables have degree one and the others zero.
    pub lowest_part: LaurentPolynomial,
    /// The lowest part is an irreducible polynomial in at least two variables.
    pub irreducible: Verdict,
    /// `V(f0)` meets the orbit where exactly the blown variables vanish.
    pub meets_orbit: Verdict,
}

impl Admissibility {
    pub fn verdict(&self) -> Verdict {
        match (&self.irreducible, &self.meets_orbit) {
            (Verdict::Fail(r), _) | (_, Verdict::Fail(r)) => Verdict::Fail(r.clone()),
            (Verdict::Unknown(r), _) | (_, Verdict::Unknown(r)) => Verdict::Unknown(r.clone()),
            _ => Verdict::Pass,
        }
    }
}

/// Checks the hypotheses under which [`proper_transform`] computes the
/// relation of the blown-up variety.
pub fn admissibility_check(f0: &LaurentPolynomial, blown: &[usize]) -> Admissibility {
    let degs = f0.weighted_degrees(blown);
    let k0 = degs.iter().copied().min().unwrap_or(0);
    let lowest = LaurentPolynomial::from_terms(
        f0.nvars(),
        f0.terms().zip(&degs).filter(|(_, &d)| d == k0).map(|((e, c), _)| (c.clone(), e.clone())),
    );
    let irreducible = irreducible_small(&lowest);

    let restricted = f0.set_zero(blown);
    // a Laurent polynomial has a zero on the torus iff it is not a unit, i.e.
    // iff it is zero or has at least two terms
    let meets_orbit = match restricted.len() {
        1 => Verdict::Fail(format!("restriction {restricted} is a monomial")),
        _ => Verdict::Pass,
    };
    Admissibility { lowest_part: lowest, irreducible, meets_orbit }
}

/// Irreducibility over `C` for polynomials with at most three terms, plus
/// the requirement of at least two variables.
fn irreducible_small(p: &LaurentPolynomial) -> Verdict {
    let vars = p.variables();
    if vars.len() < 2 {
        return Verdict::Fail(format!("{p} involves fewer than two variables"));
    }
    let g = p.gcd_monomial();
    if g.iter().any(|&x| x != 0) {
        return Verdict::Fail(format!("{p} has a monomial factor"));
    }
    let support = p.support();
    match support.len() {
        0 | 1 => Verdict::Fail(format!("{p} is a monomial")),
        2 => {
            // coprime supports: c1 x^a + c2 x^b is irreducible iff gcd(a - b) = 1
            let gcd =
                support[0].iter().zip(&support[1]).fold(BigInt::zero(), |acc, (a, b)| acc.gcd(&BigInt::from(a - b)));
            if gcd.is_one() {
                Verdict::Pass
            } else {
                Verdict::Fail(format!("{p} is a binomial whose exponent difference has content {gcd}"))
            }
        }
        3 => {
            // x * A + B with x linear, absent from B, A a monomial: irreducible
            // iff no variable of A divides both terms of B
            for &x in &vars {
                let with: Vec<&Vec<i64>> = support.iter().filter(|e| e[x] != 0).collect();
                if with.len() != 1 || with[0][x] != 1 {
                    continue;
                }
                let a = with[0];
                let b: Vec<&Vec<i64>> = support.iter().filter(|e| e[x] == 0).collect();
                let shared = (0..p.nvars()).any(|i| i != x && a[i] > 0 && b.iter().all(|e| e[i] > 0));
                return if shared {
                    Verdict::Fail(format!("{p} has a common factor in T{x}-degree zero and one", x = x + 1))
                } else {
                    Verdict::Pass
                };
            }
            Verdict::Unknown(format!("{p}: no variable occurs linearly in exactly one term"))
        }
        n => Verdict::Unknown(format!("{p} has {n} terms")),
    }
}

/// Ambient toric ring of a hypersurface presentation `R = C[T]/<g>`: one more
/// variable `T_{n+1}` of degree `deg g`, and `f0 = T_{n+1} - g`.
pub fn embed_hypersurface(pres: &GradedPresentation) -> Result<(IntMatrix, LaurentPolynomial)> {
    let [Relation::Explicit(g)] = pres.relations() else {
        return Err(Error::Unsupported(format!(
            "embedding needs exactly one explicit relation, got {}",
            pres.relations().len()
        )));
    };
    if g.is_zero() {
        return Err(Error::Unsupported(String::from("the zero relation does not cut out a hypersurface")));
    }
    let deg = pres.relation_degrees()?.remove(0);
    let q0 = pres.q().with_column(&deg)?;
    let n = pres.num_generators();
    let f0 = &LaurentPolynomial::variable(n + 1, n) - &g.extend_vars(1);
    Ok((q0, f0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str, n: usize) -> LaurentPolynomial {
        LaurentPolynomial::parse(s, n).unwrap()
    }

    #[test]
    fn transforms() {
        let f0 = poly("T7 - T2*T4 + T3*T6", 7);
        assert_eq!(proper_transform(&f0, &[4, 6]), poly("T7*T8 - T2*T4 + T3*T6", 8));
        assert_eq!(proper_transform(&poly("T1 + T2", 2), &[0, 1]), poly("T1 + T2", 3));
        assert_eq!(proper_transform(&poly("T1*T2 - T3*T4", 4), &[0, 2]), poly("T1*T2 - T3*T4", 5));
        assert_eq!(proper_transform(&poly("T1^2 + T2*T3", 3), &[0, 1]), poly("T1^2*T4 + T2*T3", 4));
    }

    #[test]
    fn admissibility() {
        let a = admissibility_check(&poly("T7 - T2*T4 + T3*T6", 7), &[4, 6]);
        assert_eq!(a.lowest_part, poly("T3*T6 - T2*T4", 7));
        assert_eq!(a.verdict(), Verdict::Pass);

        let b = admissibility_check(&poly("T1^2", 2), &[0, 1]);
        assert!(matches!(b.irreducible, Verdict::Fail(_)));

        let c = admissibility_check(&poly("T1 + T2 + T3 + T4 + T5", 5), &[0]);
        assert!(matches!(c.irreducible, Verdict::Unknown(_)));
    }

    #[test]
    fn binomials_and_trinomials() {
        assert!(irreducible_small(&poly("T1^2 - T2^2", 2)) != Verdict::Pass);
        assert_eq!(irreducible_small(&poly("T1^2 - T2^3", 2)), Verdict::Pass);
        assert_eq!(irreducible_small(&poly("T1*T2 + T3^2 + T4^2", 4)), Verdict::Pass);
        assert!(matches!(irreducible_small(&poly("T1*T2 + T2*T3 + T1*T3", 3)), Verdict::Unknown(_)));
        assert!(matches!(irreducible_small(&poly("T1*T2 + T2*T3 + T2*T4", 4)), Verdict::Fail(_)));
    }

    #[test]
    fn orbit() {
        // restriction T2 is a monomial: no zero on the torus
        let a = admissibility_check(&poly("T1 + T2", 2), &[0]);
        assert!(matches!(a.meets_orbit, Verdict::Fail(_)));
        // restriction vanishes identically: the orbit lies in V(f0)
        let b = admissibility_check(&poly("T1*T2 + T1*T3", 3), &[0]);
        assert_eq!(b.meets_orbit, Verdict::Pass);
    }

    #[test]
    fn embedding() {
        let q = IntMatrix::from_i64_rows(&[[1, 1, 1, 1]]);
        let g = poly("T1*T2 - T3*T4", 4);
        let pres = GradedPresentation::new(q, alloc::vec![Relation::Explicit(g)]).unwrap();
        let (q0, f0) = embed_hypersurface(&pres).unwrap();
        assert_eq!(q0, IntMatrix::from_i64_rows(&[[1, 1, 1, 1, 2]]));
        assert_eq!(f0, poly("T5 - T1*T2 + T3*T4", 5));
        let ring = GradedPresentation::polynomial_ring(IntMatrix::from_i64_rows(&[[1, 1]]));
        assert!(embed_hypersurface(&ring).is_err());
    }
}
