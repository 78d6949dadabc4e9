//! The dual `gl(n)` action commuting with `gl(2)`, highest-weight vectors
//! and finite-slice consequences of the Howe duality.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational};

use crate::linalg::{rank, Matrix};
use crate::scalar::{Field, GeneratorSet, Poly, QuantumParams, Ring, Specialization, Specialized, Symbolic};
use crate::sparse::SparseVector;
use crate::verma::{act_gl2_classical, act_gl2_quantum, affine, tensor_basis, Gl2Gen, MBasisIndex, Monomial};
use crate::error::Result;

/// Generators of `gl(n)`: quantum Chevalley generators with simple-root
/// indices, or classical matrix units `e_ij`. Indices are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GlnGen {
    E(usize),
    F(usize),
    L(usize),
    Unit(usize, usize),
}

impl fmt::Display for GlnGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GlnGen::E(i) => write!(f, "E{i}"),
            GlnGen::F(i) => write!(f, "F{i}"),
            GlnGen::L(i) => write!(f, "L{i}"),
            GlnGen::Unit(i, j) => write!(f, "e{i}{j}"),
        }
    }
}

fn bump(m: &Monomial, dr: &[(usize, i32)], ds: &[(usize, i32)]) -> Option<Monomial> {
    let mut out = m.clone();
    for &(i, x) in dr {
        out.r[i] += x;
    }
    for &(i, x) in ds {
        out.s[i] += x;
        if out.s[i] < 0 {
            return None;
        }
    }
    Some(out)
}

/// Quantum `gl(n)` action on monomials:
///
/// * `E_i = v^{s_i - s_{i+1}} [mu_{i+1} + r_{i+1}] X^{+alpha_i} + [s_{i+1}] Y^{+alpha_i}`
/// * `F_i = [mu_i + r_i] X^{-alpha_i} + v^{mu_{i+1} + r_{i+1} - mu_i - r_i} [s_i] Y^{-alpha_i}`
/// * `L_i = v^{mu_i + r_i + s_i}`
///
/// # Panics
///
/// On classical generators or out-of-range indices.
pub fn act_gln_quantum<P: QuantumParams>(
    p: &P,
    colors: &[usize],
    g: GlnGen,
    m: &Monomial,
) -> SparseVector<Monomial, P::S> {
    let n = m.n();
    let mut out = SparseVector::zero();
    match g {
        GlnGen::E(i) => {
            assert!(i >= 1 && i < n, "E index out of range");
            let (a, b) = (i - 1, i);
            let c = p
                .v_pow((m.s[a] - m.s[b]) as i64)
                .mul(&p.qweight(colors[b], m.r[b] as i64));
            out.add_term(bump(m, &[(a, 1), (b, -1)], &[]).unwrap(), c);
            if let Some(t) = bump(m, &[], &[(a, 1), (b, -1)]) {
                out.add_term(t, p.qint(m.s[b] as i64));
            }
        }
        GlnGen::F(i) => {
            assert!(i >= 1 && i < n, "F index out of range");
            let (a, b) = (i - 1, i);
            out.add_term(
                bump(m, &[(a, -1), (b, 1)], &[]).unwrap(),
                p.qweight(colors[a], m.r[a] as i64),
            );
            if let Some(t) = bump(m, &[], &[(a, -1), (b, 1)]) {
                let c = p
                    .power(&[(colors[b], 1), (colors[a], -1)], (m.r[b] - m.r[a]) as i64)
                    .mul(&p.qint(m.s[a] as i64));
                out.add_term(t, c);
            }
        }
        GlnGen::L(i) => {
            assert!(i >= 1 && i <= n, "L index out of range");
            let a = i - 1;
            out.add_term(m.clone(), p.power(&[(colors[a], 1)], (m.r[a] + m.s[a]) as i64));
        }
        GlnGen::Unit(..) => panic!("matrix units belong to the classical action"),
    }
    out
}

/// Classical action `e_ij = X_i d/dX_j + Y_i d/dY_j`.
///
/// # Panics
///
/// On quantum generators or out-of-range indices.
pub fn act_gln_classical(g: GlnGen, m: &Monomial) -> SparseVector<Monomial, Poly> {
    let n = m.n();
    let GlnGen::Unit(i, j) = g else {
        panic!("the classical action uses matrix units");
    };
    assert!((1..=n).contains(&i) && (1..=n).contains(&j), "index out of range");
    let (a, b) = (i - 1, j - 1);
    let mut out = SparseVector::zero();
    out.add_term(bump(m, &[(a, 1), (b, -1)], &[]).unwrap(), affine(j, m.r[b] as i64));
    if m.s[b] > 0 {
        out.add_term(bump(m, &[], &[(a, 1), (b, -1)]).unwrap(), Poly::from_i64(m.s[b] as i64));
    }
    out
}

/// Outcome of checking that two operators commute on sample monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutationReport {
    pub left: String,
    pub right: String,
    pub checked: usize,
    pub counterexamples: Vec<Monomial>,
}

impl CommutationReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Checks `a(b(m)) = b(a(m))` exactly for every sample monomial.
pub fn commutation_check<R: Ring>(
    left: &str,
    a: impl Fn(&Monomial) -> SparseVector<Monomial, R>,
    right: &str,
    b: impl Fn(&Monomial) -> SparseVector<Monomial, R>,
    sample: &[Monomial],
) -> CommutationReport {
    let counterexamples = sample
        .iter()
        .filter(|m| {
            let ab = b(m).apply(&a);
            let ba = a(m).apply(&b);
            ab != ba
        })
        .cloned()
        .collect();
    CommutationReport {
        left: left.to_string(),
        right: right.to_string(),
        checked: sample.len(),
        counterexamples,
    }
}

/// Which module structure a check runs on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    Quantum,
    Classical,
}

/// Every `gl(2)` generator against every `gl(n)` generator on `samples`
/// (formal parameters, distinct colors).
pub fn commuting_actions_check(n: usize, mode: Mode, samples: &[Monomial]) -> Vec<CommutationReport> {
    let colors: Vec<usize> = (1..=n).collect();
    let mut reports = Vec::new();
    match mode {
        Mode::Quantum => {
            let p = Symbolic;
            let mut gln: Vec<GlnGen> = (1..n).flat_map(|i| [GlnGen::E(i), GlnGen::F(i)]).collect();
            gln.extend((1..=n).map(GlnGen::L));
            for a in Gl2Gen::ALL {
                for &b in &gln {
                    reports.push(commutation_check(
                        &format!("{a:?}"),
                        |m| act_gl2_quantum(&p, &colors, a, m),
                        &b.to_string(),
                        |m| act_gln_quantum(&p, &colors, b, m),
                        samples,
                    ));
                }
            }
        }
        Mode::Classical => {
            for a in Gl2Gen::ALL {
                for i in 1..=n {
                    for j in 1..=n {
                        let b = GlnGen::Unit(i, j);
                        reports.push(commutation_check(
                            &format!("{a:?}"),
                            |m| act_gl2_classical(a, m),
                            &b.to_string(),
                            |m| act_gln_classical(b, m),
                            samples,
                        ));
                    }
                }
            }
        }
    }
    reports
}

/// Coefficient of `m_{k - e_i}` in `E m_k`.
fn e_coefficient<P: QuantumParams>(p: &P, colors: &[usize], k: &[u32], i: usize) -> P::S {
    let mu: Vec<(usize, i64)> = colors[i + 1..].iter().map(|&c| (c, 1)).collect();
    let shift: i64 = k[i + 1..].iter().map(|&x| -2 * x as i64).sum();
    p.power(&mu, shift).mul(&p.qint(k[i] as i64))
}

/// Matrix of `E` from level `l` to level `l - 1` of the grade-zero slice;
/// rows are indexed by `tensor_basis(n, l - 1)`, columns by `tensor_basis(n, l)`.
pub fn e_matrix<P: QuantumParams>(p: &P, colors: &[usize], l: u32) -> Matrix<P::S> {
    let n = colors.len();
    let src = tensor_basis(n, l);
    if l == 0 {
        return Matrix::zeros(0, src.len());
    }
    let tgt = tensor_basis(n, l - 1);
    let index: BTreeMap<&MBasisIndex, usize> = tgt.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut m = Matrix::zeros(tgt.len(), src.len());
    for (col, k) in src.iter().enumerate() {
        let image = act_gl2_quantum(p, colors, Gl2Gen::E, &k.to_monomial());
        for (mono, c) in image.iter() {
            let t = MBasisIndex::from_monomial(mono).expect("E preserves the grade");
            m.set(index[&t], col, c.clone());
        }
    }
    m
}

/// Basis of `ker E` on `span{m_k : |k| = l}`.
///
/// The equations are triangular: the coefficient of `m_{k+e_n}` in the
/// `E`-image is `[k_n + 1]`, so the labels with `k_n = 0` are free. The basis
/// vector attached to a free label has coefficient 1 there, 0 at the other
/// free labels, and this label is its first nonzero coordinate in the order
/// of `tensor_basis`.
pub fn highest_weight_basis<P: QuantumParams>(
    p: &P,
    colors: &[usize],
    l: u32,
) -> Vec<SparseVector<MBasisIndex, P::S>> {
    let n = colors.len();
    let all = tensor_basis(n, l);
    let free: Vec<&MBasisIndex> = all.iter().filter(|k| k.0[n - 1] == 0).collect();
    let mut pivots: Vec<&MBasisIndex> = all.iter().filter(|k| k.0[n - 1] > 0).collect();
    pivots.sort_by_key(|k| k.0[n - 1]);
    free.iter()
        .map(|&f| {
            let mut x: BTreeMap<MBasisIndex, P::S> = BTreeMap::new();
            x.insert(f.clone(), P::S::one());
            for &k in &pivots {
                let mut t = k.0.clone();
                t[n - 1] -= 1;
                let mut acc = P::S::zero();
                for i in 0..n - 1 {
                    let mut src = t.clone();
                    src[i] += 1;
                    if let Some(xs) = x.get(&MBasisIndex(src.clone())) {
                        acc = acc.add(&xs.mul(&e_coefficient(p, colors, &src, i)));
                    }
                }
                if !acc.is_zero() {
                    let pivot = e_coefficient(p, colors, &k.0, n - 1);
                    x.insert(k.clone(), acc.div(&pivot).neg());
                }
            }
            x.into_iter().collect()
        })
        .collect()
}

/// `C(a, b)` for small nonnegative arguments.
pub fn binomial(a: u64, b: u64) -> BigInt {
    if b > a {
        return BigInt::from(0);
    }
    (0..b).fold(BigInt::from(1), |acc, i| acc * (a - i) / (i + 1))
}

/// Dimension checks on the grade-zero slices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub n: usize,
    /// `(t, sum_{c<=t} C(c+n-2, c), C(t+n-1, t))`.
    pub identities: Vec<(u32, BigInt, BigInt)>,
    /// `(l, dim ker E, C(l+n-2, l))`.
    pub kernels: Vec<(u32, usize, BigInt)>,
    pub seed: u64,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.identities.iter().all(|(_, a, b)| a == b)
            && self.kernels.iter().all(|(_, d, e)| BigInt::from(*d) == *e)
    }
}

/// Specialized parameters for `n` distinct colors, redrawn from `seed` on
/// until admissible and free of vanishing quantum numbers up to `max_shift`.
pub fn admissible_params(n: usize, seed: u64, max_shift: i64) -> Result<Specialized> {
    let colors: Vec<usize> = (1..=n).collect();
    let sp = Specialization::draw_where(GeneratorSet::Quantum(n), seed, |sp| {
        sp.is_admissible(&colors) && Specialized::new(sp, n, max_shift).is_ok()
    })?;
    Specialized::new(&sp, n, max_shift)
}

/// Checks the binomial identity behind the graded dimension count and the
/// dimension of `ker E` on each level `l <= t_max`.
///
/// `E` maps `C(n+l-1, l)` labels onto `C(n+l-2, l-1)` labels, so the generic
/// kernel has dimension at least `C(n+l-2, l)`; a full-rank specialization
/// bounds it from above.
pub fn duality_dimension_check(n: usize, t_max: u32, seed: u64) -> Result<DualityReport> {
    assert!(n >= 2, "duality needs at least two strands");
    let n64 = n as u64;
    let identities = (0..=t_max)
        .map(|t| {
            let lhs = (0..=t as u64).fold(BigInt::from(0), |acc, c| acc + binomial(c + n64 - 2, c));
            (t, lhs, binomial(t as u64 + n64 - 1, t as u64))
        })
        .collect();
    let params = admissible_params(n, seed, t_max as i64 + 1)?;
    let colors: Vec<usize> = (1..=n).collect();
    let kernels = (0..=t_max)
        .map(|l| {
            let e = e_matrix(&params, &colors, l);
            let dim = e.cols() - rank::<BigRational>(&e);
            (l, dim, binomial(l as u64 + n64 - 2, l as u64))
        })
        .collect();
    Ok(DualityReport {
        n,
        identities,
        kernels,
        seed: params.seed(),
    })
}
