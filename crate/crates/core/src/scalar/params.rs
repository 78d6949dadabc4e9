//! The quantum scalars consumed by the module actions, either as formal
//! field elements or evaluated at a specialization.

use num::BigRational;

use super::field::FieldElement;
use super::poly::{Mono, Var};
use super::special::{qint, qweight};
use super::specialization::Specialization;
use super::Field;
use crate::error::{Error, Result};

/// Source of `v`-powers and quantum numbers for a chosen scalar type.
pub trait QuantumParams: Sync {
    type S: Field;

    /// `v^{shift} * prod_c U_c^{k_c}`, i.e. `v^{shift + sum k_c mu_c}`.
    fn power(&self, weights: &[(usize, i64)], shift: i64) -> Self::S;

    /// `[k]`.
    fn qint(&self, k: i64) -> Self::S;

    /// `[mu_color + shift]`.
    fn qweight(&self, color: usize, shift: i64) -> Self::S;

    fn v_pow(&self, e: i64) -> Self::S {
        self.power(&[], e)
    }
}

/// Formal parameters: scalars are rational functions in `v, U_i`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Symbolic;

impl QuantumParams for Symbolic {
    type S = FieldElement;

    fn power(&self, weights: &[(usize, i64)], shift: i64) -> FieldElement {
        let m = Mono::from_pairs(
            std::iter::once((Var::V, shift as i32))
                .chain(weights.iter().map(|&(c, k)| (Var::u(c), k as i32))),
        );
        FieldElement::mono(m)
    }

    fn qint(&self, k: i64) -> FieldElement {
        qint(k)
    }

    fn qweight(&self, color: usize, shift: i64) -> FieldElement {
        qweight(color, shift)
    }
}

/// Parameters evaluated at a specialization.
#[derive(Clone, Debug)]
pub struct Specialized {
    v: BigRational,
    u: Vec<BigRational>,
    seed: u64,
}

impl Specialized {
    /// Requires values for `v, U1..Un`; quantum numbers `[mu_i + r]` that
    /// vanish for `|r| <= max_shift` are rejected.
    pub fn new(sp: &Specialization, n: usize, max_shift: i64) -> Result<Self> {
        let v = sp.value(Var::V);
        let u: Vec<BigRational> = (1..=n).map(|i| sp.value(Var::u(i))).collect();
        let p = Specialized {
            v,
            u,
            seed: sp.seed(),
        };
        for c in 1..=n {
            for r in -max_shift..=max_shift {
                if p.qweight(c, r) == BigRational::from_integer(0.into()) {
                    return Err(Error::Singular(format!(
                        "[mu_{c} + {r}] vanishes at seed {}",
                        p.seed
                    )));
                }
            }
        }
        Ok(p)
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

fn rpow(x: &BigRational, e: i64) -> BigRational {
    num::pow::Pow::pow(x, e as i32)
}

impl QuantumParams for Specialized {
    type S = BigRational;

    fn power(&self, weights: &[(usize, i64)], shift: i64) -> BigRational {
        weights
            .iter()
            .fold(rpow(&self.v, shift), |acc, &(c, k)| acc * rpow(&self.u[c - 1], k))
    }

    fn qint(&self, k: i64) -> BigRational {
        (rpow(&self.v, k) - rpow(&self.v, -k)) / (&self.v - self.v.recip())
    }

    fn qweight(&self, color: usize, shift: i64) -> BigRational {
        let x = &self.u[color - 1] * rpow(&self.v, shift);
        (&x - x.recip()) / (&self.v - self.v.recip())
    }
}
