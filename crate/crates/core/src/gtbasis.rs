//! Determinant monomials, Gelfand-Tsetlin vectors, Casimir operators and
//! the infinitesimal pure braid operators for classical `gl(n)`.
//!
//! Coefficients are polynomials in the classical weights `l1..ln`.

use std::fmt;

use num::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::qgroup::{act_gln_classical, GlnGen};
use crate::scalar::{multinomial, pochhammer, Poly, Ring};
use crate::sparse::SparseVector;
use crate::verma::{affine, Monomial};

/// `X^{lambda+r} a_1^{l_1} ... a_{n-1}^{l_{n-1}}` with
/// `a_i = X_i Y_{i+1} - X_{i+1} Y_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DetMonomial {
    pub r: Vec<i32>,
    pub l: Vec<i32>,
}

impl DetMonomial {
    pub fn new(r: Vec<i32>, l: Vec<i32>) -> Self {
        assert!(!r.is_empty() && l.len() + 1 == r.len(), "need n r-entries and n-1 l-entries");
        assert!(l.iter().all(|&x| x >= 0), "a-exponents must be nonnegative");
        DetMonomial { r, l }
    }

    pub fn n(&self) -> usize {
        self.r.len()
    }

    /// `(b, c)` with `c = sum l` and `b = sum r + c`.
    pub fn block(&self) -> (i32, i32) {
        let c: i32 = self.l.iter().sum();
        (self.r.iter().sum::<i32>() + c, c)
    }

    /// `l_i` with `l_0 = l_n = 0` (1-based).
    fn l_at(&self, i: usize) -> i32 {
        if i == 0 || i >= self.n() {
            0
        } else {
            self.l[i - 1]
        }
    }

    fn shifted(&self, dr: &[(usize, i32)], dl: &[(usize, i32)]) -> Option<DetMonomial> {
        let mut m = self.clone();
        for &(i, x) in dr {
            m.r[i - 1] += x;
        }
        for &(i, x) in dl {
            if i == 0 || i >= self.n() {
                return None;
            }
            m.l[i - 1] += x;
            if m.l[i - 1] < 0 {
                return None;
            }
        }
        Some(m)
    }
}

impl fmt::Display for DetMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[i32]| v.iter().map(i32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "X[{}]a[{}]", list(&self.r), list(&self.l))
    }
}

/// `count` pseudo-random determinant monomials with `|r_i| <= 3` and
/// `l_i <= 2`, determined by `seed`.
pub fn sample_det_monomials(n: usize, count: usize, seed: u64) -> Vec<DetMonomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let r = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
            let l = (1..n).map(|_| rng.gen_range(0..=2)).collect();
            DetMonomial::new(r, l)
        })
        .collect()
}

/// Expands the product of the `a_i` into `X^{lambda+r} Y^s` monomials.
pub fn expand_det(m: &DetMonomial) -> SparseVector<Monomial, Poly> {
    let n = m.n();
    let mut acc = SparseVector::basis(Monomial::new(m.r.clone(), vec![0; n]));
    for i in 0..n - 1 {
        for _ in 0..m.l[i] {
            acc = acc.apply(|x: &Monomial| {
                let mut plus = x.clone();
                plus.r[i] += 1;
                plus.s[i + 1] += 1;
                let mut minus = x.clone();
                minus.r[i + 1] += 1;
                minus.s[i] += 1;
                [(plus, Poly::one()), (minus, Poly::one().neg())].into_iter().collect()
            });
        }
    }
    acc
}

/// Expands a combination of determinant monomials.
pub fn expand_det_vector(v: &SparseVector<DetMonomial, Poly>) -> SparseVector<Monomial, Poly> {
    v.apply(expand_det)
}

/// The action of `e_ii`, `e_{i,i+1}` or `e_{i+1,i}` (1-based) on a
/// determinant monomial:
///
/// * `e_ii`: `(lambda_i + r_i + l_{i-1} + l_i)` times the same monomial;
/// * `e_{i,i+1}`: `(lambda_{i+1} + r_{i+1} + l_{i+1}) (r + alpha_i, l)
///   + l_{i+1} (r - alpha_{i+1}, l + alpha_i)`;
/// * `e_{i+1,i}`: `(lambda_i + r_i + l_{i-1}) (r - alpha_i, l)
///   + l_{i-1} (r + alpha_{i-1}, l - alpha_{i-1})`.
pub fn act_eij_det(g: GlnGen, m: &DetMonomial) -> Result<SparseVector<DetMonomial, Poly>> {
    let n = m.n();
    let GlnGen::Unit(i, j) = g else {
        return Err(Error::Mode("determinant monomials carry the classical action".into()));
    };
    if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
        return Err(Error::argument(format!("e{i}{j} outside gl({n})")));
    }
    let mut out = SparseVector::zero();
    let r = |k: usize| m.r[k - 1] as i64;
    let l = |k: usize| m.l_at(k) as i64;
    let scalar = |k: i64| Poly::from_i64(k);
    if i == j {
        out.add_term(m.clone(), affine(i, r(i) + l(i - 1) + l(i)));
    } else if j == i + 1 {
        out.add_term(
            m.shifted(&[(i, 1), (j, -1)], &[]).unwrap(),
            affine(j, r(j) + l(j)),
        );
        if l(j) > 0 {
            let t = m.shifted(&[(j, -1), (j + 1, 1)], &[(i, 1), (j, -1)]).unwrap();
            out.add_term(t, scalar(l(j)));
        }
    } else if i == j + 1 {
        out.add_term(
            m.shifted(&[(j, -1), (i, 1)], &[]).unwrap(),
            affine(j, r(j) + l(j - 1)),
        );
        if l(j - 1) > 0 {
            let t = m.shifted(&[(j - 1, 1), (j, -1)], &[(j - 1, -1), (j, 1)]).unwrap();
            out.add_term(t, scalar(l(j - 1)));
        }
    } else {
        return Err(Error::argument(format!("e{i}{j} is not a Chevalley generator")));
    }
    Ok(out)
}

/// Compares `expand(e . m)` with `e . expand(m)` for every Chevalley
/// generator `e_ii`, `e_{i,i+1}`, `e_{i+1,i}`; returns the failing generators.
pub fn det_two_route(m: &DetMonomial) -> Vec<GlnGen> {
    let n = m.n();
    let mut gens: Vec<GlnGen> = (1..=n).map(|i| GlnGen::Unit(i, i)).collect();
    gens.extend((1..n).flat_map(|i| [GlnGen::Unit(i, i + 1), GlnGen::Unit(i + 1, i)]));
    let expanded = expand_det(m);
    gens.into_iter()
        .filter(|&g| {
            let via_det = expand_det_vector(&act_eij_det(g, m).expect("valid generator"));
            let via_monomials = expanded.apply(|x| act_gln_classical(g, x));
            via_det != via_monomials
        })
        .collect()
}

/// Any `e_ij` on a combination of determinant monomials; non-adjacent units
/// are commutators of adjacent ones.
pub fn act_unit_det(i: usize, j: usize, v: &SparseVector<DetMonomial, Poly>) -> SparseVector<DetMonomial, Poly> {
    let adjacent = |a: usize, b: usize, v: &SparseVector<DetMonomial, Poly>| {
        v.apply(|m| act_eij_det(GlnGen::Unit(a, b), m).expect("valid generator"))
    };
    if i == j || i + 1 == j || j + 1 == i {
        return adjacent(i, j, v);
    }
    let k = if i < j { i + 1 } else { i - 1 };
    let a = act_unit_det(k, j, &adjacent(i, k, v));
    let b = adjacent(i, k, &act_unit_det(k, j, v));
    b.sub(&a)
}

/// A two-diagonal Gelfand-Tsetlin pattern: second diagonal `c_1 = 0, c_2, ..., c_n`
/// with nonnegative steps `d_i = c_{i+1} - c_i`, and first-diagonal offsets `r`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GTPattern {
    c: Vec<i32>,
    r: Vec<i32>,
}

impl GTPattern {
    pub fn new(c: Vec<i32>, r: Vec<i32>) -> Result<Self> {
        if c.is_empty() || c.len() != r.len() {
            return Err(Error::argument("c and r need n >= 1 entries each"));
        }
        if c[0] != 0 {
            return Err(Error::argument("c_1 must be 0"));
        }
        if c.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::argument("differences c_{i+1} - c_i must be nonnegative"));
        }
        Ok(GTPattern { c, r })
    }

    pub fn n(&self) -> usize {
        self.c.len()
    }

    pub fn c(&self) -> &[i32] {
        &self.c
    }

    pub fn r(&self) -> &[i32] {
        &self.r
    }

    pub fn d(&self) -> Vec<i32> {
        self.c.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// `sum_{i<=k} (lambda_i + r_i)`.
    pub fn partial_weight(&self, k: usize) -> Poly {
        (1..=k).fold(Poly::zero(), |acc, i| acc.add(&affine(i, self.r[i - 1] as i64)))
    }

    /// `x_k = sum_{i<=k}(lambda_i + r_i) + c_{k+1}` for `k < n`, and
    /// `x_n = sum(lambda_i + r_i) + c_n`.
    pub fn x(&self, k: usize) -> Poly {
        let n = self.n();
        let c = if k < n { self.c[k] } else { self.c[n - 1] };
        self.partial_weight(k).add(&Poly::from_i64(c as i64))
    }

    /// All patterns with `c_n <= c_max` and `|r_i| <= r_max`.
    pub fn enumerate(n: usize, c_max: i32, r_max: i32) -> Vec<GTPattern> {
        let mut cs: Vec<Vec<i32>> = vec![vec![0]];
        for _ in 1..n {
            cs = cs
                .into_iter()
                .flat_map(|c| {
                    let last = *c.last().unwrap();
                    (last..=c_max).map(move |x| {
                        let mut c = c.clone();
                        c.push(x);
                        c
                    })
                })
                .collect();
        }
        let mut rs: Vec<Vec<i32>> = vec![vec![]];
        for _ in 0..n {
            rs = rs
                .into_iter()
                .flat_map(|r| {
                    (-r_max..=r_max).map(move |x| {
                        let mut r = r.clone();
                        r.push(x);
                        r
                    })
                })
                .collect();
        }
        cs.iter()
            .flat_map(|c| rs.iter().map(move |r| GTPattern { c: c.clone(), r: r.clone() }))
            .collect()
    }
}

impl fmt::Display for GTPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[i32]| v.iter().map(i32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "GT{{n={}; c=[{}]; r=[{}]}}", self.n(), list(&self.c), list(&self.r))
    }
}

impl std::str::FromStr for GTPattern {
    type Err = Error;

    /// Parses `GT{n=3; c=[0,1,2]; r=[0,0,0]}`.
    fn from_str(text: &str) -> Result<Self> {
        let bad = |msg: &str| Error::parse(0, format!("{msg} in '{text}'"));
        let body = text
            .trim()
            .strip_prefix("GT{")
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| bad("expected GT{...}"))?;
        let mut n = None;
        let mut c = None;
        let mut r = None;
        for field in body.split(';') {
            let (key, value) = field.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            let list = |v: &str| -> Result<Vec<i32>> {
                let inner = v.trim().strip_prefix('[').and_then(|v| v.strip_suffix(']')).ok_or_else(|| bad("expected a list"))?;
                if inner.trim().is_empty() {
                    return Ok(vec![]);
                }
                inner.split(',').map(|x| x.trim().parse().map_err(|_| bad("bad integer"))).collect()
            };
            match key.trim() {
                "n" => n = Some(value.trim().parse::<usize>().map_err(|_| bad("bad n"))?),
                "c" => c = Some(list(value)?),
                "r" => r = Some(list(value)?),
                other => return Err(bad(&format!("unknown key '{other}'"))),
            }
        }
        let (c, r) = (c.ok_or_else(|| bad("missing c"))?, r.ok_or_else(|| bad("missing r"))?);
        if n.is_some_and(|n| n != c.len()) {
            return Err(bad("n does not match the lists"));
        }
        GTPattern::new(c, r)
    }
}

/// The GT vector
/// `sum_j M(d, d + sum j_i alpha_i) prod_i (S_i - j_i + 1)_{d_i + j_i - j_{i-1}}
///  X^{lambda + r - sum_i (j_i - j_{i-2}) e_i} a^{d + sum j_i alpha_i}`
/// with `S_i = sum_{k<=i}(lambda_k + r_k)` and `j_i = 0` outside `1..=n-2`.
pub fn gt_vector(p: &GTPattern) -> SparseVector<DetMonomial, Poly> {
    let n = p.n();
    let d = p.d();
    let du: Vec<u32> = d.iter().map(|&x| x as u32).collect();
    let partial: Vec<Poly> = (0..=n).map(|k| p.partial_weight(k)).collect();
    let mut out = SparseVector::zero();
    let m = n.saturating_sub(2);
    // j_i <= d_{i+1} + j_{i+1}, otherwise the multinomial vanishes.
    let mut js: Vec<Vec<i32>> = vec![vec![0; m]];
    for i in (0..m).rev() {
        js = js
            .into_iter()
            .flat_map(|j| {
                let bound = d[i + 1] + if i + 1 < m { j[i + 1] } else { 0 };
                (0..=bound).map(move |x| {
                    let mut j = j.clone();
                    j[i] = x;
                    j
                })
            })
            .collect();
    }
    let jat = |j: &[i32], i: i64| if i >= 1 && (i as usize) <= m { j[i as usize - 1] } else { 0 };
    for j in js {
        let l: Vec<i32> = (1..n).map(|i| d[i - 1] + jat(&j, i as i64) - jat(&j, i as i64 - 1)).collect();
        if l.iter().any(|&x| x < 0) {
            continue;
        }
        let lu: Vec<u32> = l.iter().map(|&x| x as u32).collect();
        let mult = multinomial(&du, &lu);
        if mult == BigInt::from(0) {
            continue;
        }
        let mut coeff = Poly::constant(mult);
        for i in 1..n {
            let base = partial[i].add(&Poly::from_i64(1 - jat(&j, i as i64) as i64));
            coeff = coeff.mul(&pochhammer(&base, l[i - 1] as u32));
        }
        let r: Vec<i32> = (1..=n)
            .map(|i| p.r[i - 1] - (jat(&j, i as i64) - jat(&j, i as i64 - 2)))
            .collect();
        out.add_term(DetMonomial::new(r, l), coeff);
    }
    out
}

/// `C_k = sum_{i,j<=k} e_ij e_ji`.
pub fn casimir_apply(k: usize, v: &SparseVector<DetMonomial, Poly>) -> SparseVector<DetMonomial, Poly> {
    let mut out = SparseVector::zero();
    for i in 1..=k {
        for j in 1..=k {
            let w = act_unit_det(i, j, &act_unit_det(j, i, v));
            out.add_scaled(&w, &Poly::one());
        }
    }
    out
}

/// `x_k (x_k + k - 1) + c_k (c_k + k - 3)`.
pub fn casimir_eigenvalue_expected(p: &GTPattern, k: usize) -> Poly {
    let x = p.x(k);
    let c = p.c[k - 1] as i64;
    x.mul(&x.add(&Poly::from_i64(k as i64 - 1)))
        .add(&Poly::from_i64(c * (c + k as i64 - 3)))
}

/// Second route to `C_k`: `2 z_k + h_k` with `z_k = sum_{j<i<=k} e_ji e_ij`
/// and the Cartan part `h_k = sum_{j<i<=k} (e_ii - e_jj) + sum_{i<=k} e_ii^2`.
pub(crate) fn casimir_split(k: usize, v: &SparseVector<DetMonomial, Poly>) -> SparseVector<DetMonomial, Poly> {
    let two = Poly::from_i64(2);
    let mut out = SparseVector::zero();
    for i in 1..=k {
        for j in 1..i {
            out.add_scaled(&act_unit_det(j, i, &act_unit_det(i, j, v)), &two);
            out.add_scaled(&act_unit_det(i, i, v), &Poly::one());
            out.add_scaled(&act_unit_det(j, j, v), &Poly::one().neg());
        }
        out.add_scaled(&act_unit_det(i, i, &act_unit_det(i, i, v)), &Poly::one());
    }
    out
}

/// Result of checking a Casimir eigenvalue on one GT vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CasimirCheck {
    pub pattern: GTPattern,
    pub k: usize,
    pub passed: bool,
}

/// Checks `C_k gt(p) = [x_k(x_k+k-1) + c_k(c_k+k-3)] gt(p)` by both routes.
pub fn casimir_check(p: &GTPattern, k: usize) -> CasimirCheck {
    let g = gt_vector(p);
    let expected = g.scale(&casimir_eigenvalue_expected(p, k));
    let direct = casimir_apply(k, &g);
    let split = casimir_split(k, &g);
    CasimirCheck {
        pattern: p.clone(),
        k,
        passed: direct == expected && split == expected,
    }
}

/// Runs [`casimir_check`] for every pattern with `n <= n_max`, `c_n <= c_max`,
/// `|r_i| <= r_max` and every `k <= n`; results are in enumeration order.
pub fn casimir_sweep(n_max: usize, c_max: i32, r_max: i32) -> Vec<CasimirCheck> {
    let jobs: Vec<(GTPattern, usize)> = (1..=n_max)
        .flat_map(|n| GTPattern::enumerate(n, c_max, r_max))
        .flat_map(|p| (1..=p.n()).map(move |k| (p.clone(), k)))
        .collect();
    jobs.par_iter().map(|(p, k)| casimir_check(p, *k)).collect()
}

/// `omega_ij = X_i X_j d_Xi d_Xj + X_i Y_j d_Yi d_Xj + Y_i X_j d_Xi d_Yj + Y_i Y_j d_Yi d_Yj`
/// for `i != j` (1-based, symmetric in `i, j`).
pub fn infbraid_apply(i: usize, j: usize, m: &Monomial) -> SparseVector<Monomial, Poly> {
    assert!(i != j && i >= 1 && j >= 1 && i <= m.n() && j <= m.n(), "invalid strand pair");
    let (a, b) = (i - 1, j - 1);
    let xa = affine(i, m.r[a] as i64);
    let xb = affine(j, m.r[b] as i64);
    let (sa, sb) = (m.s[a] as i64, m.s[b] as i64);
    let mut out = SparseVector::zero();
    out.add_term(m.clone(), xa.mul(&xb).add(&Poly::from_i64(sa * sb)));
    if sa > 0 {
        let mut t = m.clone();
        t.r[a] += 1;
        t.s[a] -= 1;
        t.r[b] -= 1;
        t.s[b] += 1;
        out.add_term(t, xb.mul(&Poly::from_i64(sa)));
    }
    if sb > 0 {
        let mut t = m.clone();
        t.r[a] -= 1;
        t.s[a] += 1;
        t.r[b] += 1;
        t.s[b] -= 1;
        out.add_term(t, xa.mul(&Poly::from_i64(sb)));
    }
    out
}

/// One failed identity of the infinitesimal braid suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfBraidFailure {
    pub relation: String,
    pub monomial: Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfBraidReport {
    pub n: usize,
    pub samples: usize,
    pub identities_checked: usize,
    pub failures: Vec<InfBraidFailure>,
}

impl InfBraidReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

type Op = Box<dyn Fn(&SparseVector<Monomial, Poly>) -> SparseVector<Monomial, Poly>>;

fn omega(i: usize, j: usize) -> Op {
    Box::new(move |v| v.apply(|m| infbraid_apply(i, j, m)))
}

fn sum_ops(a: Op, b: Op) -> Op {
    Box::new(move |v| a(v).add(&b(v)))
}

fn unit(i: usize, j: usize) -> Op {
    Box::new(move |v| v.apply(|m| act_gln_classical(GlnGen::Unit(i, j), m)))
}

/// Checks, for pairwise distinct `i, j, r, s`,
/// `[w_ij, w_rs] = [w_ir + w_is, w_rs] = [w_ij, w_ir + w_jr] = 0`
/// and `e_ij e_ji = w_ij + e_ii` on every sample monomial.
pub fn infbraid_relations_check(n: usize, samples: &[Monomial]) -> InfBraidReport {
    let mut relations: Vec<(String, Op, Op, Option<Op>)> = Vec::new();
    let idx = 1..=n;
    for i in idx.clone() {
        for j in idx.clone() {
            if i == j {
                continue;
            }
            relations.push((
                format!("e{i}{j} e{j}{i} = w{i}{j} + e{i}{i}"),
                Box::new(move |v: &SparseVector<Monomial, Poly>| unit(i, j)(&unit(j, i)(v))),
                sum_ops(omega(i, j), unit(i, i)),
                None,
            ));
            for r in idx.clone() {
                if r == i || r == j {
                    continue;
                }
                relations.push((
                    format!("[w{i}{j}, w{i}{r} + w{j}{r}] = 0"),
                    omega(i, j),
                    sum_ops(omega(i, r), omega(j, r)),
                    Some(Box::new(|v: &SparseVector<Monomial, Poly>| v.clone())),
                ));
                for s in idx.clone() {
                    if s == i || s == j || s == r {
                        continue;
                    }
                    relations.push((
                        format!("[w{i}{j}, w{r}{s}] = 0"),
                        omega(i, j),
                        omega(r, s),
                        Some(Box::new(|v: &SparseVector<Monomial, Poly>| v.clone())),
                    ));
                }
            }
        }
    }
    let mut failures = Vec::new();
    for (name, a, b, commutator) in &relations {
        for m in samples {
            let v = SparseVector::basis(m.clone());
            let ok = if commutator.is_some() {
                a(&b(&v)) == b(&a(&v))
            } else {
                a(&v) == b(&v)
            };
            if !ok {
                failures.push(InfBraidFailure {
                    relation: name.clone(),
                    monomial: m.clone(),
                });
            }
        }
    }
    InfBraidReport {
        n,
        samples: samples.len(),
        identities_checked: relations.len(),
        failures,
    }
}
