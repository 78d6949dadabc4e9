//! Sparse multivariate Laurent polynomials with integer coefficients.
//!
//! Monomials are stored sparsely as sorted `(Var, exponent)` lists and
//! compared lexicographically on their dense exponent vectors, with the
//! variables ordered `v < U1 < U2 < ... < l1 < l2 < ...`.

use std::cmp::Ordering;
use std::fmt;

use num::{BigInt, Integer, One, Signed, Zero};
use smallvec::SmallVec;

/// A generator of the ground field.
///
/// `v` and the `U_i` (standing for `v^{mu_i}`) are invertible; the classical
/// weights `l_i` are not.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Var(u16);

const LAMBDA_OFFSET: u16 = 1 << 10;

impl Var {
    pub const V: Var = Var(0);

    /// `U_i` for a 1-based color index `i`.
    pub fn u(i: usize) -> Var {
        assert!(i >= 1 && (i as u16) < LAMBDA_OFFSET, "color index out of range");
        Var(i as u16)
    }

    /// Classical weight `l_i` for a 1-based index `i`.
    pub fn lambda(i: usize) -> Var {
        assert!((1..1 << 12).contains(&i), "weight index out of range");
        Var(LAMBDA_OFFSET + i as u16)
    }

    pub fn is_invertible(self) -> bool {
        self.0 < LAMBDA_OFFSET
    }

    /// 1-based index of `U_i` / `l_i`; `None` for `v`.
    pub fn index(self) -> Option<usize> {
        match self.0 {
            0 => None,
            x if x < LAMBDA_OFFSET => Some(x as usize),
            x => Some((x - LAMBDA_OFFSET) as usize),
        }
    }

    pub fn name(self) -> String {
        match self.0 {
            0 => "v".to_string(),
            x if x < LAMBDA_OFFSET => format!("U{x}"),
            x => format!("l{}", x - LAMBDA_OFFSET),
        }
    }

    pub fn parse(name: &str) -> Option<Var> {
        if name == "v" {
            return Some(Var::V);
        }
        let (head, tail) = name.split_at(1);
        let idx: usize = tail.parse().ok().filter(|&i| i >= 1)?;
        match head {
            "U" if idx < LAMBDA_OFFSET as usize => Some(Var::u(idx)),
            "l" if idx < 1 << 12 => Some(Var::lambda(idx)),
            _ => None,
        }
    }
}

/// A Laurent monomial: sorted variable/exponent pairs, no zero exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Mono(SmallVec<[(Var, i32); 4]>);

impl Mono {
    pub fn one() -> Self {
        Mono(SmallVec::new())
    }

    pub fn var(x: Var, e: i32) -> Self {
        let mut m = Mono::one();
        if e != 0 {
            m.0.push((x, e));
        }
        m
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, i32)>) -> Self {
        let mut m = Mono::one();
        for (x, e) in pairs {
            m = m.mul(&Mono::var(x, e));
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exp(&self, x: Var) -> i32 {
        self.0
            .iter()
            .find(|(y, _)| *y == x)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn pairs(&self) -> &[(Var, i32)] {
        &self.0
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.0.iter().map(|&(x, _)| x)
    }

    fn combine(&self, other: &Mono, sign: i32) -> Mono {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, sign * b[j].1));
                j += 1;
            } else {
                let e = a[i].1 + sign * b[j].1;
                if e != 0 {
                    out.push((a[i].0, e));
                }
                i += 1;
                j += 1;
            }
        }
        Mono(out)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        self.combine(other, 1)
    }

    pub fn div(&self, other: &Mono) -> Mono {
        self.combine(other, -1)
    }

    pub fn pow(&self, k: i32) -> Mono {
        if k == 0 {
            return Mono::one();
        }
        Mono(self.0.iter().map(|&(x, e)| (x, e * k)).collect())
    }

    /// Every exponent of a non-invertible variable is nonnegative.
    pub fn is_admissible(&self) -> bool {
        self.0.iter().all(|&(x, e)| x.is_invertible() || e >= 0)
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&(_, e)| e >= 0)
    }

    /// Componentwise minimum (missing exponents count as zero).
    pub fn meet(&self, other: &Mono) -> Mono {
        let mut vars: SmallVec<[Var; 8]> = self.vars().chain(other.vars()).collect();
        vars.sort();
        vars.dedup();
        Mono::from_pairs(
            vars.into_iter()
                .map(|x| (x, self.exp(x).min(other.exp(x)))),
        )
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e as i64).sum()
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            let (x, ea, eb) = match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(x, e)), None) => {
                    i += 1;
                    (x, e, 0)
                }
                (None, Some(&(y, e))) => {
                    j += 1;
                    (y, 0, e)
                }
                (Some(&(x, e)), Some(&(y, f))) => match x.cmp(&y) {
                    Ordering::Less => {
                        i += 1;
                        (x, e, 0)
                    }
                    Ordering::Greater => {
                        j += 1;
                        (y, 0, f)
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (x, e, f)
                    }
                },
            };
            let _ = x;
            match ea.cmp(&eb) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (k, &(x, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{}", x.name())?;
            } else {
                write!(f, "{}^{}", x.name(), e)?;
            }
        }
        Ok(())
    }
}

/// Sparse Laurent polynomial over the integers; terms sorted ascending by
/// monomial order with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Poly {
    terms: Vec<(Mono, BigInt)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::term(Mono::one(), c)
    }

    pub fn term(m: Mono, c: BigInt) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn mono(m: Mono) -> Self {
        Poly::term(m, BigInt::one())
    }

    pub fn var(x: Var) -> Self {
        Poly::mono(Mono::var(x, 1))
    }

    /// Builds a polynomial from unsorted, possibly repeated terms.
    pub fn from_terms(mut terms: Vec<(Mono, BigInt)>) -> Self {
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Mono, BigInt)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Mono, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// A nonzero integer constant.
    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Mono, BigInt)> {
        self.terms.last()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut v: Vec<Var> = self.terms.iter().flat_map(|(m, _)| m.vars()).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Poly { terms: out }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.merge(other, true)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if other.is_monomial() {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.is_monomial() {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                terms.push((ma.mul(mb), ca * cb));
            }
        }
        Poly::from_terms(terms)
    }

    /// Multiplication by a single term keeps the term order.
    pub fn mul_term(&self, m: &Mono, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), tc * c))
                .collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono) -> Poly {
        self.mul_term(m, &BigInt::one())
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        self.mul_term(&Mono::one(), c)
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divides every coefficient by `c`; caller guarantees exactness.
    pub fn div_int_exact(&self, c: &BigInt) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x / c)).collect(),
        }
    }

    /// Gcd of the integer coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Componentwise minimum exponent over all terms (missing counts as zero).
    /// This is the largest monomial dividing every term.
    pub fn min_mono(&self) -> Mono {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return Mono::one();
        };
        let mut m = first.clone();
        for (t, _) in it {
            m = m.meet(t);
        }
        m
    }

    /// Degree bounds of `x`: (min exponent, max exponent) over the terms.
    pub fn degree_range(&self, x: Var) -> (i32, i32) {
        let mut lo = i32::MAX;
        let mut hi = i32::MIN;
        for (m, _) in &self.terms {
            let e = m.exp(x);
            lo = lo.min(e);
            hi = hi.max(e);
        }
        (lo, hi)
    }

    /// Exact division by a nonzero polynomial. Both sides must be honest
    /// polynomials (nonnegative exponents); returns `None` if the division
    /// leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if divisor.is_one() {
            return Some(self.clone());
        }
        if divisor.is_monomial() {
            let (m, c) = &divisor.terms[0];
            let mut terms = Vec::with_capacity(self.len());
            for (tm, tc) in &self.terms {
                let (q, r) = tc.div_rem(c);
                if !r.is_zero() {
                    return None;
                }
                let qm = tm.div(m);
                if !qm.is_nonneg() {
                    return None;
                }
                terms.push((qm, q));
            }
            return Some(Poly { terms });
        }
        let (lm, lc) = divisor.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((rm, rc)) = rem.leading().cloned() {
            let (q, r) = rc.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            let qm = rm.div(&lm);
            if !qm.is_nonneg() {
                return None;
            }
            rem = rem.sub(&divisor.mul_term(&qm, &q));
            quot.push((qm, q));
        }
        Some(Poly::from_terms(quot))
    }

    /// Substitutes rational values for variables; `None` if a variable with a
    /// negative exponent is assigned zero.
    pub fn eval<F>(&self, mut value: F) -> Option<num::BigRational>
    where
        F: FnMut(Var) -> num::BigRational,
    {
        use num::BigRational;
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for &(x, e) in m.pairs() {
                let val = value(x);
                if e < 0 && val.is_zero() {
                    return None;
                }
                t *= num::pow::Pow::pow(&val, e);
            }
            acc += t;
        }
        Some(acc)
    }

    pub fn leading_sign_negative(&self) -> bool {
        self.leading().map(|(_, c)| c.is_negative()).unwrap_or(false)
    }
}

impl fmt::Display for Poly {
    /// Terms printed from the greatest monomial down.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(e: i32) -> Poly {
        Poly::mono(Mono::var(Var::V, e))
    }

    #[test]
    fn mono_order_is_dense_lex() {
        let a = Mono::from_pairs([(Var::V, 1)]);
        let b = Mono::from_pairs([(Var::u(1), 5)]);
        assert!(a > b);
        let c = Mono::from_pairs([(Var::V, 1), (Var::u(1), -1)]);
        assert!(c < a && c > b);
        assert!(Mono::var(Var::u(2), -1) < Mono::one());
    }

    #[test]
    fn arithmetic_and_exact_division() {
        let p = v(1).add(&Poly::one()); // v + 1
        let q = v(1).sub(&Poly::one()); // v - 1
        let prod = p.mul(&q);
        assert_eq!(prod, v(2).sub(&Poly::one()));
        assert_eq!(prod.div_exact(&p), Some(q.clone()));
        assert_eq!(v(2).add(&Poly::one()).div_exact(&p), None);
        assert_eq!(format!("{}", prod), "v^2 - 1");
    }

    #[test]
    fn var_names_round_trip() {
        for x in [Var::V, Var::u(3), Var::lambda(12)] {
            assert_eq!(Var::parse(&x.name()), Some(x));
        }
        assert_eq!(Var::parse("U0"), None);
        assert_eq!(Var::parse("w"), None);
    }
}
