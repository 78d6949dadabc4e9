//! Tensor products of dual Verma modules in the monomial model.
//!
//! The `n`-fold tensor product is spanned by monomials `X^{mu+r} Y^s`; the
//! strand-`i` weight `mu_i` is `mu_{colors[i]}`, so strands may share a color.
//! Grade-zero monomials `X^{mu-k} Y^k` are the tensors `m_{k_1} x ... x m_{k_n}`.

use std::fmt;

use num::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalar::{Poly, QuantumParams, Ring, Var};
use crate::sparse::SparseVector;

/// The monomial `X^{mu+r} Y^s`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    pub r: Vec<i32>,
    pub s: Vec<i32>,
}

impl Monomial {
    pub fn new(r: Vec<i32>, s: Vec<i32>) -> Self {
        assert_eq!(r.len(), s.len(), "r and s must have equal length");
        assert!(s.iter().all(|&x| x >= 0), "Y-exponents must be nonnegative");
        Monomial { r, s }
    }

    /// `X^mu`, the top monomial.
    pub fn top(n: usize) -> Self {
        Monomial::new(vec![0; n], vec![0; n])
    }

    pub fn n(&self) -> usize {
        self.r.len()
    }

    /// Grade `d_i = r_i + s_i`.
    pub fn grade(&self) -> Vec<i32> {
        self.r.iter().zip(&self.s).map(|(a, b)| a + b).collect()
    }

    fn shifted(&self, dr: &[(usize, i32)], ds: &[(usize, i32)]) -> Option<Monomial> {
        let mut m = self.clone();
        for &(i, x) in dr {
            m.r[i] += x;
        }
        for &(i, x) in ds {
            m.s[i] += x;
            if m.s[i] < 0 {
                return None;
            }
        }
        Some(m)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[i32]| v.iter().map(i32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "X[{}]Y[{}]", list(&self.r), list(&self.s))
    }
}

/// `m_{k_1} x ... x m_{k_n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MBasisIndex(pub Vec<u32>);

impl MBasisIndex {
    pub fn level(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn to_monomial(&self) -> Monomial {
        let r = self.0.iter().map(|&k| -(k as i32)).collect();
        let s = self.0.iter().map(|&k| k as i32).collect();
        Monomial::new(r, s)
    }

    /// Inverse of [`MBasisIndex::to_monomial`] on the grade-zero slice.
    pub fn from_monomial(m: &Monomial) -> Option<Self> {
        if m.grade().iter().any(|&d| d != 0) {
            return None;
        }
        Some(MBasisIndex(m.s.iter().map(|&k| k as u32).collect()))
    }
}

impl fmt::Display for MBasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|k| format!("m{k}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// All `k` with `|k| = l`, in decreasing lexicographic order.
pub fn tensor_basis(n: usize, l: u32) -> Vec<MBasisIndex> {
    fn rec(n: usize, l: u32, prefix: &mut Vec<u32>, out: &mut Vec<MBasisIndex>) {
        if prefix.len() + 1 == n {
            prefix.push(l);
            out.push(MBasisIndex(prefix.clone()));
            prefix.pop();
            return;
        }
        for k in (0..=l).rev() {
            prefix.push(k);
            rec(n, l - k, prefix, out);
            prefix.pop();
        }
    }
    assert!(n >= 1, "at least one tensor factor");
    let mut out = Vec::new();
    rec(n, l, &mut Vec::new(), &mut out);
    out
}

/// Generators of `gl(2)`. In the classical action `K` stands for the Cartan
/// element `h = l1 - l2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Gl2Gen {
    E,
    F,
    L1,
    L2,
    K,
}

impl Gl2Gen {
    pub const ALL: [Gl2Gen; 5] = [Gl2Gen::E, Gl2Gen::F, Gl2Gen::L1, Gl2Gen::L2, Gl2Gen::K];
}

/// The identity coloring `1, 2, ..., n`.
pub fn distinct_colors(n: usize) -> Vec<usize> {
    (1..=n).collect()
}

/// Colors and `v`-shift of `sum_j (mu_j + r_j - s_j)` over the strands in `range`.
fn weights(colors: &[usize], range: impl Iterator<Item = usize>, m: &Monomial) -> (Vec<(usize, i64)>, i64) {
    let mut mu = Vec::new();
    let mut shift = 0i64;
    for j in range {
        mu.push((colors[j], 1));
        shift += (m.r[j] - m.s[j]) as i64;
    }
    (mu, shift)
}

/// Quantum `gl(2)` action with `Delta(E) = E x K + 1 x E`,
/// `Delta(F) = F x 1 + K^{-1} x F`.
pub fn act_gl2_quantum<P: QuantumParams>(
    p: &P,
    colors: &[usize],
    gen: Gl2Gen,
    m: &Monomial,
) -> SparseVector<Monomial, P::S> {
    let n = m.n();
    debug_assert_eq!(colors.len(), n);
    let mut out = SparseVector::zero();
    match gen {
        Gl2Gen::E => {
            for i in 0..n {
                if m.s[i] == 0 {
                    continue;
                }
                let (mu, shift) = weights(colors, i + 1..n, m);
                let c = p.power(&mu, shift).mul(&p.qint(m.s[i] as i64));
                out.add_term(m.shifted(&[(i, 1)], &[(i, -1)]).unwrap(), c);
            }
        }
        Gl2Gen::F => {
            for i in 0..n {
                let (mu, shift) = weights(colors, 0..i, m);
                let mu: Vec<(usize, i64)> = mu.into_iter().map(|(c, k)| (c, -k)).collect();
                let c = p.power(&mu, -shift).mul(&p.qweight(colors[i], m.r[i] as i64));
                out.add_term(m.shifted(&[(i, -1)], &[(i, 1)]).unwrap(), c);
            }
        }
        Gl2Gen::L1 | Gl2Gen::L2 | Gl2Gen::K => {
            let mu: Vec<(usize, i64)> = colors.iter().map(|&c| (c, 1)).collect();
            let r: i64 = m.r.iter().map(|&x| x as i64).sum();
            let s: i64 = m.s.iter().map(|&x| x as i64).sum();
            let c = match gen {
                Gl2Gen::L1 => p.power(&mu, r),
                Gl2Gen::L2 => p.v_pow(s),
                _ => p.power(&mu, r - s),
            };
            out.add_term(m.clone(), c);
        }
    }
    out
}

/// `lambda_i + c` as a polynomial.
pub(crate) fn affine(i: usize, c: i64) -> Poly {
    Poly::var(Var::lambda(i)).add(&Poly::constant(BigInt::from(c)))
}

/// Classical action by the derivations `e = sum X_i d/dY_i`,
/// `f = sum Y_i d/dX_i`, `l1 = sum X_i d/dX_i`, `l2 = sum Y_i d/dY_i`.
pub fn act_gl2_classical(gen: Gl2Gen, m: &Monomial) -> SparseVector<Monomial, Poly> {
    let n = m.n();
    let mut out = SparseVector::zero();
    match gen {
        Gl2Gen::E => {
            for i in 0..n {
                if m.s[i] > 0 {
                    out.add_term(m.shifted(&[(i, 1)], &[(i, -1)]).unwrap(), Poly::from_i64(m.s[i] as i64));
                }
            }
        }
        Gl2Gen::F => {
            for i in 0..n {
                out.add_term(m.shifted(&[(i, -1)], &[(i, 1)]).unwrap(), affine(i + 1, m.r[i] as i64));
            }
        }
        Gl2Gen::L1 | Gl2Gen::L2 | Gl2Gen::K => {
            let x = (0..n).fold(Poly::zero(), |acc, i| acc.add(&affine(i + 1, m.r[i] as i64)));
            let y = Poly::from_i64(m.s.iter().map(|&s| s as i64).sum());
            let c = match gen {
                Gl2Gen::L1 => x,
                Gl2Gen::L2 => y,
                _ => x.sub(&y),
            };
            out.add_term(m.clone(), c);
        }
    }
    out
}

/// Weight and grade of a monomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightGrade {
    /// `L1` exponent is `sum mu + l1_shift`.
    pub l1_shift: i64,
    /// `L2` exponent.
    pub l2: i64,
    pub d: Vec<i32>,
}

pub fn weight_and_grade(m: &Monomial) -> WeightGrade {
    WeightGrade {
        l1_shift: m.r.iter().map(|&x| x as i64).sum(),
        l2: m.s.iter().map(|&x| x as i64).sum(),
        d: m.grade(),
    }
}

/// `count` pseudo-random monomials with `|r_i| <= 3` and `s_i <= 3`,
/// determined by `seed`.
pub fn sample_monomials(n: usize, count: usize, seed: u64) -> Vec<Monomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let r = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
            let s = (0..n).map(|_| rng.gen_range(0..=3)).collect();
            Monomial::new(r, s)
        })
        .collect()
}
