//! Rational functions in canonical reduced form.

use std::fmt;

use num::{BigInt, BigRational, One, Signed};

use super::gcd::gcd;
use super::poly::{Mono, Poly, Var};
use super::{Field, Ring};

/// Which generators a computation lives over.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GeneratorSet {
    /// `v, U1..Un`, all invertible.
    Quantum(usize),
    /// `l1..ln`, polynomial.
    Classical(usize),
}

impl GeneratorSet {
    pub fn n(self) -> usize {
        match self {
            GeneratorSet::Quantum(n) | GeneratorSet::Classical(n) => n,
        }
    }

    pub fn generators(self) -> Vec<Var> {
        match self {
            GeneratorSet::Quantum(n) => std::iter::once(Var::V).chain((1..=n).map(Var::u)).collect(),
            GeneratorSet::Classical(n) => (1..=n).map(Var::lambda).collect(),
        }
    }

    pub fn contains(self, x: Var) -> bool {
        self.generators().contains(&x)
    }

    /// Every variable of `x` belongs to this generator set.
    pub fn admits(self, x: &FieldElement) -> bool {
        x.num.vars().into_iter().chain(x.den.vars()).all(|y| self.contains(y))
    }
}

/// A quotient `num / den` of Laurent polynomials.
///
/// Canonical form: `num` and `den` share no nonunit factor, `den` has no
/// monomial factor in invertible variables, the integer contents are coprime
/// and the lexicographically greatest term of `den` is positive. Equality of
/// field elements is therefore equality of representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FieldElement {
    num: Poly,
    den: Poly,
}

fn invertible_part(m: &Mono) -> Mono {
    Mono::from_pairs(m.pairs().iter().copied().filter(|(x, _)| x.is_invertible()))
}

/// Smallest exponent of each invertible variable across the terms.
fn invertible_floor(p: &Poly) -> Mono {
    invertible_part(&p.min_mono())
}

impl FieldElement {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return FieldElement::zero();
        }
        let sn = invertible_floor(&num);
        let sd = invertible_floor(&den);
        let num = num.mul_mono(&sn.pow(-1));
        let den = den.mul_mono(&sd.pow(-1));
        assert!(
            num.min_mono().is_nonneg() && den.min_mono().is_nonneg(),
            "negative exponent of a non-invertible generator"
        );
        let unit = sn.div(&sd);
        let (num, den) = if den.is_one() {
            (num, den)
        } else if den.is_constant() {
            let d = den.constant_value().unwrap();
            let g = num.content().gcd_with(&d);
            (num.div_int_exact(&g), den.div_int_exact(&g))
        } else {
            let g = gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
            }
        };
        let (num, den) = if den.leading_sign_negative() {
            (num.neg(), den.neg())
        } else {
            (num, den)
        };
        FieldElement {
            num: num.mul_mono(&unit),
            den,
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        FieldElement::new(p, Poly::one())
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        FieldElement {
            num: Poly::constant(c.into()),
            den: Poly::one(),
        }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        FieldElement::new(
            Poly::constant(q.numer().clone()),
            Poly::constant(q.denom().clone()),
        )
    }

    pub fn var(x: Var) -> Self {
        FieldElement {
            num: Poly::var(x),
            den: Poly::one(),
        }
    }

    /// The Laurent monomial `v^a * U1^b1 * ...` (or any monomial in `l_i`).
    pub fn mono(m: Mono) -> Self {
        FieldElement::new(Poly::mono(m), Poly::one())
    }

    pub fn v_pow(e: i64) -> Self {
        FieldElement::mono(Mono::var(Var::V, e as i32))
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        let mut acc = FieldElement::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return FieldElement::new(self.num.add(&other.num), self.den.clone());
        }
        if self.den.is_one() {
            return FieldElement::new(
                self.num.mul(&other.den).add(&other.num),
                other.den.clone(),
            );
        }
        if other.den.is_one() {
            return FieldElement::new(self.num.add(&other.num.mul(&self.den)), self.den.clone());
        }
        let g = gcd(&self.den, &other.den);
        let a = self.den.div_exact(&g).unwrap();
        let b = other.den.div_exact(&g).unwrap();
        let num = self.num.mul(&b).add(&other.num.mul(&a));
        FieldElement::new(num, self.den.mul(&b))
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return FieldElement::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return FieldElement::new(self.num.mul(&other.num), Poly::one());
        }
        let g1 = gcd_laurent(&self.num, &other.den);
        let g2 = gcd_laurent(&other.num, &self.den);
        let n1 = self.num.div_exact_laurent(&g1);
        let d2 = other.den.div_exact_laurent(&g1);
        let n2 = other.num.div_exact_laurent(&g2);
        let d1 = self.den.div_exact_laurent(&g2);
        FieldElement::new(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn neg_ref(&self) -> Self {
        FieldElement {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(FieldElement::new(self.den.clone(), self.num.clone()))
        }
    }

    /// Substitutes rational values; `None` when the denominator vanishes.
    pub fn eval<F: FnMut(Var) -> BigRational + Clone>(&self, value: F) -> Option<BigRational> {
        let d = self.den.eval(value.clone())?;
        if num::Zero::is_zero(&d) {
            return None;
        }
        Some(self.num.eval(value)? / d)
    }
}

/// Gcd of Laurent polynomials, ignoring unit monomials.
fn gcd_laurent(a: &Poly, b: &Poly) -> Poly {
    let a = a.mul_mono(&invertible_floor(a).pow(-1));
    let b = b.mul_mono(&invertible_floor(b).pow(-1));
    gcd(&a, &b)
}

trait LaurentDiv {
    fn div_exact_laurent(&self, d: &Poly) -> Poly;
}

impl LaurentDiv for Poly {
    fn div_exact_laurent(&self, d: &Poly) -> Poly {
        if d.is_one() {
            return self.clone();
        }
        let shift = invertible_floor(self);
        self.mul_mono(&shift.pow(-1))
            .div_exact(d)
            .expect("inexact division by a gcd")
            .mul_mono(&shift)
    }
}

trait GcdWith {
    fn gcd_with(&self, other: &BigInt) -> BigInt;
}

impl GcdWith for BigInt {
    fn gcd_with(&self, other: &BigInt) -> BigInt {
        let g = num::Integer::gcd(self, other);
        if other.is_negative() {
            -g
        } else {
            g
        }
    }
}

impl Ring for FieldElement {
    fn zero() -> Self {
        FieldElement {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }
    fn one() -> Self {
        FieldElement {
            num: Poly::one(),
            den: Poly::one(),
        }
    }
    fn from_i64(k: i64) -> Self {
        FieldElement::from_int(k)
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
    fn add(&self, other: &Self) -> Self {
        self.add_ref(other)
    }
    fn sub(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }
    fn mul(&self, other: &Self) -> Self {
        self.mul_ref(other)
    }
    fn neg(&self) -> Self {
        self.neg_ref()
    }
}

impl Field for FieldElement {
    fn inv(&self) -> Option<Self> {
        FieldElement::inv(self)
    }
}

impl fmt::Display for FieldElement {
    /// Canonical text: `num` or `(num)/(den)` with integer coefficients.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            let num = if self.num.len() > 1 {
                format!("({})", self.num)
            } else {
                format!("{}", self.num)
            };
            let den = if self.den.len() > 1 || !self.den.is_constant() && !self.den.terms()[0].1.is_one() {
                format!("({})", self.den)
            } else {
                format!("{}", self.den)
            };
            write!(f, "{num}/{den}")
        }
    }
}

impl From<i64> for FieldElement {
    fn from(k: i64) -> Self {
        FieldElement::from_int(k)
    }
}

impl From<Poly> for FieldElement {
    fn from(p: Poly) -> Self {
        FieldElement::from_poly(p)
    }
}
