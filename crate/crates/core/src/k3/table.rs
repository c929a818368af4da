//! Fixed lattices of non-symplectic involutions in low Picard number and
//! the quotient surfaces they determine.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::intlin::{GramForm, TwoElementaryInvariants};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub form: GramForm,
    /// Conventional name of the lattice, e.g. `U(2)+A1^2`.
    pub lattice: String,
    pub invariants: TwoElementaryInvariants,
    /// The quotient surface `Y`.
    pub quotient: String,
    /// `K_Y^2`
    pub k_squared: i64,
    /// Self-intersection and canonical degree of the rational branch component, if any.
    pub rational_component: Option<(i64, i64)>,
    pub branch_genus: BigInt,
    /// E.g. `P1 + C10`, with `C_g` a smooth curve of genus `g`.
    pub branch: String,
}

/// The two-elementary lattices of signature `(1, rho - 1)` for
/// `2 <= rho <= 5` with their quotient surfaces and branch curves.
pub fn classification_table(rho: usize) -> Result<Vec<TableRow>> {
    if !(2..=5).contains(&rho) {
        return Err(Error::OutOfRange(format!("Picard number {rho} outside 2..=5")));
    }
    let a1s = GramForm::a1().power(rho - 2);
    let with_a1 = |base: GramForm| if rho == 2 { base } else { base.direct_sum(&a1s) };
    let suffix = if rho == 2 { String::new() } else { format!("+A1^{}", rho - 2) };
    let blown = rho as i64 - 2;
    let mut rows = Vec::new();
    let mut push =
        |form: GramForm, lattice: String, quotient: String, k_squared: i64, c1: Option<(i64, i64)>| -> Result<()> {
            let invariants = form.two_elementary()?;
            let genus = branch_genus(k_squared, c1)?;
            let branch = match c1 {
                Some(_) => format!("P1 + C{genus}"),
                None => format!("C{genus}"),
            };
            rows.push(TableRow {
                form,
                lattice,
                invariants,
                quotient,
                k_squared,
                rational_component: c1,
                branch_genus: genus,
                branch,
            });
            Ok(())
        };
    let bl = |s: &str| if blown == 0 { String::from(s) } else { format!("Bl{blown}({s})") };
    push(with_a1(GramForm::u()), format!("U{suffix}"), bl("F4"), 8 - blown, Some((-4, 2)))?;
    push(with_a1(GramForm::u().twist(2)), format!("U(2){suffix}"), bl("F0"), 8 - blown, None)?;
    if rho == 2 {
        push(
            GramForm::rank_one(2).direct_sum(&GramForm::a1()),
            String::from("(2)+A1"),
            String::from("Bl1(P2)"),
            8,
            None,
        )?;
    }
    for (i, a) in rows.iter().enumerate() {
        if let Some(b) = rows[..i].iter().find(|b| b.invariants == a.invariants) {
            return Err(Error::Inconsistent(format!(
                "{} and {} share invariants {:?}",
                a.lattice, b.lattice, a.invariants
            )));
        }
    }
    Ok(rows)
}

/// Genus of the non-rational branch component, by adjunction, for a branch
/// divisor `B ~ -2K`. `rational` holds `(C1^2, C1.K)` of a rational component.
pub fn branch_genus(k_squared: i64, rational: Option<(i64, i64)>) -> Result<BigInt> {
    let k2 = BigInt::from(k_squared);
    match rational {
        None => Ok(k2 + 1),
        Some((c2, ck)) => {
            if c2 + ck != -2 {
                return Err(Error::Inconsistent(format!(
                    "C1^2 + C1.K = {} but a smooth rational curve has -2",
                    c2 + ck
                )));
            }
            // C_B = -2K - C1
            let cb2: BigInt = &k2 * 4 + 4 * ck + c2;
            let cbk: BigInt = -(&k2 * BigInt::from(2)) - ck;
            let (g, r) = (cb2 + cbk).div_rem(&BigInt::from(2));
            if r != BigInt::from(0) {
                return Err(Error::Inconsistent(String::from("odd C_B^2 + C_B.K")));
            }
            Ok(g + 1)
        }
    }
}

/// Number of hyperbolic lattices of rank `rho` that occur as Picard
/// lattices of K3 surfaces with polyhedral effective cone.
pub fn nikulin_counts(rho: usize) -> Result<u32> {
    Ok(match rho {
        3 => 27,
        4 => 17,
        5 | 6 => 10,
        7 => 9,
        8 => 12,
        9 => 10,
        10 => 9,
        11 | 12 => 4,
        13 | 14 => 3,
        15..=19 => 1,
        20 => 0,
        _ => return Err(Error::OutOfRange(format!("Picard number {rho} outside 3..=20"))),
    })
}
