//! Which integers an indefinite binary form represents.
//!
//! A rank-two Gram matrix `[[a, b], [b, c]]` gives the form
//! `a x^2 + 2b xy + c y^2` of discriminant `D = -4 det`. Zero is represented
//! iff `D` is a square. For a nonzero target `m` and nonsquare `D`, a
//! primitive representation of `m` is the same as an `SL2(Z)`-equivalence
//! between the form and some `(m, b, c)` with `b` taken mod `2m`; equivalence
//! of indefinite forms is decided by comparing cycles of reduced forms.
//! Square `D` is handled by moving an isotropic vector to `e1`, after which
//! the form factors as `y (Bx + Cy)`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ClassVector, GramForm};
use crate::{Error, Result};

/// A `2x2` integer matrix `[[p, q], [r, s]]`.
type Mat2 = [[BigInt; 2]; 2];

fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn mat_identity() -> Mat2 {
    [[BigInt::one(), BigInt::zero()], [BigInt::zero(), BigInt::one()]]
}

/// Inverse of a determinant-one matrix.
fn mat_inverse(a: &Mat2) -> Mat2 {
    [[a[1][1].clone(), -&a[0][1]], [-&a[1][0], a[0][0].clone()]]
}

/// `a x^2 + b xy + c y^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Bqf {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl Bqf {
    fn disc(&self) -> BigInt {
        &self.b * &self.b - BigInt::from(4) * &self.a * &self.c
    }

    fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        &self.a * x * x + &self.b * x * y + &self.c * y * y
    }

    /// The form `(x, y) -> f(m (x, y))`.
    fn act(&self, m: &Mat2) -> Bqf {
        let [[p, q], [r, s]] = m;
        let two = BigInt::from(2);
        Bqf {
            a: self.eval(p, r),
            b: &two * &self.a * p * q + &self.b * (p * s + q * r) + &two * &self.c * r * s,
            c: self.eval(q, s),
        }
    }

    fn max_abs(&self) -> BigInt {
        self.a.abs().max(self.b.abs()).max(self.c.abs())
    }

    /// Reduced for nonsquare `D > 0` with `s = floor(sqrt D)`.
    fn is_reduced(&self, s: &BigInt) -> bool {
        let two_a = BigInt::from(2) * self.a.abs();
        self.b.is_positive() && &self.b <= s && s < &(&two_a + &self.b) && &(&two_a - &self.b) <= s
    }

    /// One step of the reduction operator, with the matrix realising it.
    fn rho(&self, s: &BigInt) -> (Bqf, Mat2) {
        let c = &self.c;
        let two_c = BigInt::from(2) * c.abs();
        // b' = -b + 2ct lies in a window of length 2|c|; find its lower end
        let lower: BigInt = if &c.abs() > s { -c.abs() + 1 } else { s - &two_c + 1 };
        let r: BigInt = (-&self.b - &lower).mod_floor(&two_c);
        let b_new = &lower + r;
        let t = (&b_new + &self.b).div_floor(&(BigInt::from(2) * c));
        let m = [[BigInt::zero(), -BigInt::one()], [BigInt::one(), t]];
        let g = self.act(&m);
        debug_assert_eq!(g.b, b_new);
        (g, m)
    }

    /// Applies `rho` until reduced; returns the reduced form and the accumulated matrix.
    fn reduce(&self, s: &BigInt) -> (Bqf, Mat2) {
        let mut f = self.clone();
        let mut m = mat_identity();
        while !f.is_reduced(s) {
            let (g, step) = f.rho(s);
            f = g;
            m = mat_mul(&m, &step);
        }
        (f, m)
    }

    /// The cycle of reduced forms through a reduced form, with transition
    /// matrices from the first element.
    fn cycle(&self, s: &BigInt) -> Vec<(Bqf, Mat2)> {
        let mut out = alloc::vec![(self.clone(), mat_identity())];
        loop {
            let (f, m) = out.last().unwrap();
            let (g, step) = f.rho(s);
            if g == *self {
                return out;
            }
            let m = mat_mul(m, &step);
            out.push((g, m));
        }
    }
}

/// How the answer of [`represents`] was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Target `0`: decided by whether `-det` is a perfect square.
    Isotropy { neg_det_square: bool },
    /// Square discriminant, nonzero target: all divisor pairs were tried.
    Divisors { divisors_checked: usize },
    /// Nonsquare discriminant: each candidate form `(m/t^2, b, c)` was reduced
    /// and searched for in the cycle of reduced forms of the input.
    ReductionCycle { cycle_length: usize, max_coefficient: BigInt, candidates: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub target: BigInt,
    pub witness: Option<ClassVector>,
    pub certificate: Certificate,
}

/// Decides whether the even form `g` of signature `(1,1)` takes the value
/// `target`, returning a witness `w` with `w^T g w = target` when it does.
pub fn represents(g: &GramForm, target: &BigInt) -> Result<Representation> {
    if g.rank() != 2 {
        return Err(Error::Shape(alloc::format!("expected a rank-2 form, got rank {}", g.rank())));
    }
    if !g.is_even() {
        return Err(Error::NotEven);
    }
    if g.signature()? != (1, 1) {
        return Err(Error::Unsupported(alloc::string::String::from("form is not of signature (1,1)")));
    }
    let m = g.gram();
    let f = Bqf { a: m[(0, 0)].clone(), b: BigInt::from(2) * &m[(0, 1)], c: m[(1, 1)].clone() };
    let d = f.disc();
    let s = d.sqrt();
    let square = &s * &s == d;

    let witness = |x: BigInt, y: BigInt| Some(ClassVector(alloc::vec![x, y]));
    if target.is_zero() {
        let w = square.then(|| isotropic_vector(&f, &s)).and_then(|(x, y)| witness(x, y));
        return Ok(Representation {
            target: target.clone(),
            witness: w,
            certificate: Certificate::Isotropy { neg_det_square: square },
        });
    }
    if square {
        return Ok(represent_split(&f, &s, target));
    }
    Ok(represent_by_cycles(&f, &s, target))
}

fn isotropic_vector(f: &Bqf, s: &BigInt) -> (BigInt, BigInt) {
    if f.a.is_zero() {
        return (BigInt::one(), BigInt::zero());
    }
    // a x^2 + b x y + c y^2 = 0 has the root x/y = (-b + s) / 2a
    let x = -&f.b + s;
    let y = BigInt::from(2) * &f.a;
    let g = x.gcd(&y);
    (x / &g, y / g)
}

fn represent_split(f: &Bqf, s: &BigInt, target: &BigInt) -> Representation {
    let (x0, y0) = isotropic_vector(f, s);
    // x0 e.x + y0 e.y = 1, so [[x0, -e.y], [y0, e.x]] lies in SL2
    let e = x0.extended_gcd(&y0);
    let mat: Mat2 = [[x0, -e.y.clone()], [y0, e.x.clone()]];
    let h = f.act(&mat);
    debug_assert!(h.a.is_zero());
    // h(X, Y) = Y (b X + c Y)
    let mut checked = 0;
    let n = target.abs();
    let mut found = None;
    let mut y = BigInt::one();
    while y <= n && found.is_none() {
        if n.is_multiple_of(&y) {
            for yy in [y.clone(), -y.clone()] {
                checked += 1;
                let rest = target / &yy - &h.c * &yy;
                if rest.is_multiple_of(&h.b) {
                    let xx = rest / &h.b;
                    let x = &mat[0][0] * &xx + &mat[0][1] * &yy;
                    let yv = &mat[1][0] * &xx + &mat[1][1] * &yy;
                    found = Some(ClassVector(alloc::vec![x, yv]));
                    break;
                }
            }
        }
        y += 1;
    }
    Representation {
        target: target.clone(),
        witness: found,
        certificate: Certificate::Divisors { divisors_checked: checked },
    }
}

fn represent_by_cycles(f: &Bqf, s: &BigInt, target: &BigInt) -> Representation {
    let d = f.disc();
    let (f_red, m1) = f.reduce(s);
    let cycle = f_red.cycle(s);
    let max_coefficient = cycle.iter().map(|(g, _)| g.max_abs()).max().unwrap_or_default();
    let mut candidates = 0;
    let mut found = None;

    // t^2 m' = target, representation of m' by a primitive vector
    let mut t = BigInt::one();
    'outer: while &t * &t <= target.abs() {
        let tt = &t * &t;
        if target.is_multiple_of(&tt) {
            let mp = target / &tt;
            let mut b: BigInt = -mp.abs() + 1;
            while b <= mp.abs() {
                let num: BigInt = &b * &b - &d;
                let four_m = BigInt::from(4) * &mp;
                if num.is_multiple_of(&four_m) {
                    candidates += 1;
                    let g = Bqf { a: mp.clone(), b: b.clone(), c: num / four_m };
                    let (g_red, m2) = g.reduce(s);
                    if let Some((_, ck)) = cycle.iter().find(|(h, _)| *h == g_red) {
                        // g m2 = f m1 ck, so g = f (m1 ck m2^-1)
                        let mm = mat_mul(&mat_mul(&m1, ck), &mat_inverse(&m2));
                        let w = ClassVector(alloc::vec![&mm[0][0] * &t, &mm[1][0] * &t]);
                        found = Some(w);
                        break 'outer;
                    }
                }
                b += 1;
            }
        }
        t += 1;
    }
    Representation {
        target: target.clone(),
        witness: found,
        certificate: Certificate::ReductionCycle { cycle_length: cycle.len(), max_coefficient, candidates },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(a: i64, b: i64, c: i64) -> GramForm {
        GramForm::from_i64_rows(&[[a, b], [b, c]]).unwrap()
    }

    fn check(g: &GramForm, t: i64) -> Option<ClassVector> {
        let r = represents(g, &BigInt::from(t)).unwrap();
        if let Some(w) = &r.witness {
            assert_eq!(g.square(w), BigInt::from(t), "{g:?} {w}");
        }
        r.witness
    }

    #[test]
    fn isotropic_examples() {
        assert_eq!(check(&form(0, 3, 0), 0), Some(ClassVector::from_i64s(&[1, 0])));
        let w = check(&form(4, 0, -4), 0).unwrap();
        assert!(w == ClassVector::from_i64s(&[1, 1]) || w == ClassVector::from_i64s(&[1, -1]));
        assert!(check(&form(2, 0, -6), 0).is_none());
    }

    #[test]
    fn minus_two() {
        assert!(check(&form(2, 0, -6), -2).is_none());
        assert!(check(&form(2, 1, -2), -2).is_some());
        assert!(check(&form(0, 3, 0), -2).is_none());
        assert!(check(&form(0, 1, 0), -2).is_some());
        assert!(check(&form(-2, 3, 0), -2).is_some());
    }

    #[test]
    fn reduction_cycle_is_closed() {
        let f = Bqf { a: BigInt::from(2), b: BigInt::zero(), c: BigInt::from(-6) };
        let s = f.disc().sqrt();
        let (r, m) = f.reduce(&s);
        assert!(r.is_reduced(&s));
        assert_eq!(f.act(&m), r);
        for (g, c) in r.cycle(&s) {
            assert!(g.is_reduced(&s));
            assert_eq!(r.act(&c), g);
        }
    }

    #[test]
    fn input_errors() {
        assert!(matches!(represents(&GramForm::a1(), &BigInt::zero()), Err(Error::Shape(_))));
        let odd = GramForm::from_i64_rows(&[[1, 0], [0, -1]]).unwrap();
        assert_eq!(represents(&odd, &BigInt::zero()).unwrap_err(), Error::NotEven);
        let definite = form(2, 0, 2);
        assert!(matches!(represents(&definite, &BigInt::zero()), Err(Error::Unsupported(_))));
    }
}
