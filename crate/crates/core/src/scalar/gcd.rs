//! Multivariate polynomial gcd over the integers.
//!
//! Inputs are honest polynomials (nonnegative exponents). A modular
//! evaluation test first detects variables in which the gcd is trivially of
//! degree zero; the remaining cases fall back to a recursive primitive
//! pseudo-remainder sequence.

use num::{BigInt, Integer, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::poly::{Mono, Poly, Var};

const PRIME: u64 = 2_305_843_009_213_693_951; // 2^61 - 1

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    acc
}

fn big_mod(c: &BigInt) -> u64 {
    c.mod_floor(&BigInt::from(PRIME)).to_u64().unwrap()
}

/// Dense image of `p` in `F_p[x]` with every other variable evaluated.
fn eval_univariate(p: &Poly, x: Var, point: &dyn Fn(Var) -> u64) -> Vec<u64> {
    let (_, hi) = p.degree_range(x);
    let mut out = vec![0u64; hi as usize + 1];
    for (m, c) in p.terms() {
        let mut t = big_mod(c);
        let mut deg = 0usize;
        for &(y, e) in m.pairs() {
            if y == x {
                deg = e as usize;
            } else {
                t = mulmod(t, powmod(point(y), e as u64));
            }
        }
        out[deg] = (out[deg] + t) % PRIME;
    }
    out
}

fn trim(p: &mut Vec<u64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn univariate_gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let inv = powmod(*b.last().unwrap(), PRIME - 2);
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let f = mulmod(*a.last().unwrap(), inv);
            for (i, &bc) in b.iter().enumerate() {
                a[i + shift] = (a[i + shift] + PRIME - mulmod(f, bc)) % PRIME;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Returns `true` when the gcd of `a` and `b` certainly has degree zero in `x`.
fn coprime_in(a: &Poly, b: &Poly, x: Var) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ x.index().unwrap_or(0) as u64);
    for _ in 0..3 {
        let vals: Vec<(Var, u64)> = a
            .vars()
            .into_iter()
            .chain(b.vars())
            .map(|y| (y, rng.gen_range(2..PRIME)))
            .collect();
        let point = |y: Var| vals.iter().find(|(z, _)| *z == y).unwrap().1;
        let ea = eval_univariate(a, x, &point);
        let eb = eval_univariate(b, x, &point);
        // Degrees must survive evaluation for the bound to be valid.
        if ea.last() == Some(&0) || eb.last() == Some(&0) {
            continue;
        }
        return univariate_gcd_degree(ea, eb) == 0;
    }
    false
}

/// Coefficients of `p` viewed as a polynomial in `x`, indexed by degree.
fn coefficients(p: &Poly, x: Var) -> Vec<Poly> {
    let (_, hi) = p.degree_range(x);
    let mut buckets: Vec<Vec<(Mono, BigInt)>> = vec![Vec::new(); hi as usize + 1];
    for (m, c) in p.terms() {
        let e = m.exp(x);
        buckets[e as usize].push((m.div(&Mono::var(x, e)), c.clone()));
    }
    buckets.into_iter().map(Poly::from_terms).collect()
}

fn from_coefficients(cs: &[Poly], x: Var) -> Poly {
    let mut acc = Poly::zero();
    for (e, c) in cs.iter().enumerate() {
        acc = acc.add(&c.mul_mono(&Mono::var(x, e as i32)));
    }
    acc
}

fn normalize_sign(p: Poly) -> Poly {
    if p.leading_sign_negative() {
        p.neg()
    } else {
        p
    }
}

fn gcd_many<'a>(ps: impl IntoIterator<Item = &'a Poly>) -> Poly {
    let mut g = Poly::zero();
    for p in ps {
        g = gcd(&g, p);
        if g.is_one() {
            break;
        }
    }
    g
}

fn div(a: &Poly, b: &Poly) -> Poly {
    a.div_exact(b).expect("inexact division by a gcd")
}

/// Greatest common divisor with positive leading coefficient; `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return normalize_sign(b.clone());
    }
    if b.is_zero() {
        return normalize_sign(a.clone());
    }
    if a.is_one() || b.is_one() {
        return Poly::one();
    }
    let ma = a.min_mono();
    let mb = b.min_mono();
    let mono = ma.meet(&mb);
    let ca = a.content();
    let cb = b.content();
    let int = ca.gcd(&cb);
    let scale = |p: Poly| p.mul_term(&mono, &int);
    if a.is_monomial() || b.is_monomial() {
        return scale(Poly::one());
    }
    let a = a.div_exact(&Poly::term(ma, ca)).unwrap();
    let b = b.div_exact(&Poly::term(mb, cb)).unwrap();
    scale(primitive_gcd(&a, &b))
}

/// Gcd of primitive polynomials with no monomial factor.
fn primitive_gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a == b {
        return normalize_sign(a.clone());
    }
    let va = a.vars();
    let vb = b.vars();
    // A variable present in only one operand cannot divide the gcd.
    if let Some(&x) = va.iter().find(|x| !vb.contains(x)) {
        let mut cs = coefficients(a, x);
        cs.push(b.clone());
        return gcd_many(cs.iter());
    }
    if let Some(&x) = vb.iter().find(|x| !va.contains(x)) {
        let mut cs = coefficients(b, x);
        cs.push(a.clone());
        return gcd_many(cs.iter());
    }
    let mut best: Option<(i32, Var)> = None;
    for &x in &va {
        if coprime_in(a, b, x) {
            let mut cs = coefficients(a, x);
            cs.extend(coefficients(b, x));
            return gcd_many(cs.iter());
        }
        let deg = a.degree_range(x).1.max(b.degree_range(x).1);
        if best.is_none_or(|(d, _)| deg < d) {
            best = Some((deg, x));
        }
    }
    let x = best.expect("nonconstant operands share a variable").1;
    prs_gcd(a, b, x)
}

fn prs_gcd(a: &Poly, b: &Poly, x: Var) -> Poly {
    let ca = coefficients(a, x);
    let cb = coefficients(b, x);
    let conta = gcd_many(ca.iter());
    let contb = gcd_many(cb.iter());
    let content = gcd(&conta, &contb);
    let mut p: Vec<Poly> = ca.iter().map(|c| div(c, &conta)).collect();
    let mut q: Vec<Poly> = cb.iter().map(|c| div(c, &contb)).collect();
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        let r = pseudo_remainder(&p, &q);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            q = vec![Poly::one()];
            break;
        }
        let c = gcd_many(r.iter());
        p = q;
        q = r.iter().map(|t| div(t, &c)).collect();
    }
    let g = from_coefficients(&q, x);
    normalize_sign(g.mul(&content))
}

/// Sparse pseudo-remainder of `p` by `q` in the main variable; trailing zero
/// coefficients are trimmed so the result length is degree + 1.
fn pseudo_remainder(p: &[Poly], q: &[Poly]) -> Vec<Poly> {
    let lq = q.last().unwrap();
    let mut r: Vec<Poly> = p.to_vec();
    while r.len() >= q.len() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - q.len();
        for c in r.iter_mut() {
            *c = c.mul(lq);
        }
        for (i, qc) in q.iter().enumerate() {
            r[i + shift] = r[i + shift].sub(&qc.mul(&lr));
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}
