//! Quantum integers, factorials, binomials, Pochhammer symbols and
//! multinomial-type coefficients.

use num::{BigInt, One, Zero};

use super::field::{FieldElement, GeneratorSet};
use super::poly::{Mono, Poly, Var};
use super::{Field, Ring};
use crate::error::{Error, Result};

/// Argument of a quantum number: a plain integer `k`, or `mu_color + shift`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QArg {
    Int(i64),
    Weight { color: usize, shift: i64 },
}

fn require_quantum(gens: GeneratorSet) -> Result<()> {
    match gens {
        GeneratorSet::Quantum(_) => Ok(()),
        GeneratorSet::Classical(_) => Err(Error::Mode(
            "quantum numbers need the quantum generators".into(),
        )),
    }
}

/// `[k] = v^{k-1} + v^{k-3} + ... + v^{1-k}`.
pub(crate) fn qint(k: i64) -> FieldElement {
    let sign = if k < 0 { -1 } else { 1 };
    let k = k.abs();
    let terms = (0..k)
        .map(|t| (Mono::var(Var::V, (k - 1 - 2 * t) as i32), BigInt::from(sign)))
        .collect();
    FieldElement::from_poly(Poly::from_terms(terms))
}

/// `[mu_color + shift] = (U v^shift - U^-1 v^-shift) / (v - v^-1)`.
pub(crate) fn qweight(color: usize, shift: i64) -> FieldElement {
    let u = Var::u(color);
    let up = Mono::from_pairs([(Var::V, shift as i32), (u, 1)]);
    let down = up.pow(-1);
    let num = Poly::from_terms(vec![(up, BigInt::one()), (down, -BigInt::one())]);
    let den = Poly::from_terms(vec![
        (Mono::var(Var::V, 1), BigInt::one()),
        (Mono::var(Var::V, -1), -BigInt::one()),
    ]);
    FieldElement::new(num, den)
}

pub fn qnum(gens: GeneratorSet, x: QArg) -> Result<FieldElement> {
    require_quantum(gens)?;
    match x {
        QArg::Int(k) => Ok(qint(k)),
        QArg::Weight { color, shift } => {
            if color == 0 || color > gens.n() {
                return Err(Error::argument(format!(
                    "color index {color} outside 1..={}",
                    gens.n()
                )));
            }
            Ok(qweight(color, shift))
        }
    }
}

/// `[k]! = [1][2]...[k]`.
pub fn qfact(k: u32) -> FieldElement {
    (1..=k as i64).fold(FieldElement::one(), |acc, i| acc.mul(&qint(i)))
}

/// Gaussian binomial `[k]! / ([j]! [k-j]!)`.
pub fn qbinom(k: u32, j: u32) -> Result<FieldElement> {
    if j > k {
        return Err(Error::argument(format!("binomial index {j} exceeds {k}")));
    }
    Ok(qfact(k).div(&qfact(j).mul(&qfact(k - j))))
}

pub fn qfact_qbinom(gens: GeneratorSet, k: u32, j: u32) -> Result<(FieldElement, FieldElement)> {
    require_quantum(gens)?;
    Ok((qfact(k), qbinom(k, j)?))
}

/// Increasing Pochhammer symbol `base (base+1) ... (base+len-1)`.
pub fn pochhammer<R: Ring>(base: &R, len: u32) -> R {
    (0..len as i64).fold(R::one(), |acc, i| acc.mul(&base.add(&R::from_i64(i))))
}

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    factorial(n as u32) / (factorial(k as u32) * factorial((n - k) as u32))
}

/// Coefficient of `X^s` in `prod_i (X_1 + ... + X_i)^{d_i}`, by expanding the
/// factors one at a time from the last.
pub fn multinomial(d: &[u32], s: &[u32]) -> BigInt {
    if d.len() != s.len() {
        return BigInt::zero();
    }
    let s: Vec<i64> = s.iter().map(|&x| x as i64).collect();
    expand(d, d.len(), &s)
}

fn expand(d: &[u32], i: usize, s: &[i64]) -> BigInt {
    if i == 0 {
        return if s.iter().all(|&x| x == 0) { BigInt::one() } else { BigInt::zero() };
    }
    if s[i..].iter().any(|&x| x != 0) {
        return BigInt::zero();
    }
    let mut total = BigInt::zero();
    let mut t = vec![0i64; i];
    distribute(d, i, s, d[i - 1] as i64, 0, &mut t, &mut total);
    total
}

/// Enumerates `t` with `sum t = remaining`, `t <= s` on the first `i`
/// coordinates, accumulating `d_i!/prod t_k! * expand(i-1, s - t)`.
fn distribute(
    d: &[u32],
    i: usize,
    s: &[i64],
    remaining: i64,
    k: usize,
    t: &mut Vec<i64>,
    total: &mut BigInt,
) {
    if k + 1 == i {
        if remaining > s[k] {
            return;
        }
        t[k] = remaining;
        let rest: Vec<i64> = s.iter().enumerate().map(|(m, &x)| if m < i { x - t[m] } else { x }).collect();
        let inner = expand(d, i - 1, &rest);
        if !inner.is_zero() {
            let coeff = t.iter().fold(factorial(d[i - 1]), |acc, &x| acc / factorial(x as u32));
            *total += coeff * inner;
        }
        return;
    }
    for x in 0..=remaining.min(s[k]) {
        t[k] = x;
        distribute(d, i, s, remaining - x, k + 1, t, total);
    }
}

/// The same coefficient as `prod_i C(d_{i+1} + j_{i+1}, j_i)` where
/// `s = d + sum_i j_i (e_i - e_{i+1})`.
pub fn multinomial_product_form(d: &[u32], s: &[u32]) -> BigInt {
    let m = d.len();
    if s.len() != m {
        return BigInt::zero();
    }
    let mut j = vec![0i64; m + 1];
    for k in 0..m {
        let prev = if k == 0 { 0 } else { j[k - 1] };
        j[k] = prev + s[k] as i64 - d[k] as i64;
        if j[k] < 0 {
            return BigInt::zero();
        }
    }
    if j[m - 1] != 0 {
        return BigInt::zero();
    }
    (0..m.saturating_sub(1)).fold(BigInt::one(), |acc, i| {
        acc * binomial(d[i + 1] as i64 + j[i + 1], j[i])
    })
}
