//! Substituting rational values for the formal generators.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{FieldElement, GeneratorSet};
use super::poly::Var;
use crate::error::{Error, Result};

/// Retries allowed when a drawn specialization turns out to be unusable.
pub const MAX_REDRAWS: u64 = 16;

/// A rational value for every generator, together with the seed it was
/// drawn from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Specialization {
    values: BTreeMap<Var, BigRational>,
    seed: u64,
}

fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Values tried for `v`: 2, 3/2, 5/3, 7/4, ...
fn v_choice(seed: u64) -> BigRational {
    let k = (seed % 8) as i64 + 1;
    if k == 1 {
        ratio(2, 1)
    } else {
        ratio(2 * k - 1, k)
    }
}

impl Specialization {
    pub fn from_values(values: BTreeMap<Var, BigRational>, seed: u64) -> Result<Self> {
        if let Some(v) = values.get(&Var::V) {
            if v.is_zero() || v.abs().is_one() {
                return Err(Error::argument("v must avoid 0, 1 and -1"));
            }
        }
        if values.values().any(Zero::is_zero) {
            return Err(Error::argument("generators must be specialized to nonzero values"));
        }
        Ok(Specialization { values, seed })
    }

    /// Deterministic draw for `seed`: `v` from a fixed list and each `U_i` a
    /// random positive rational. Classical generators get random rationals.
    pub fn draw(gens: GeneratorSet, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut values = BTreeMap::new();
        let random_ratio = |rng: &mut ChaCha8Rng| loop {
            let p = rng.gen_range(2..=97);
            let q = rng.gen_range(2..=97);
            if p != q {
                return ratio(p, q);
            }
        };
        match gens {
            GeneratorSet::Quantum(n) => {
                values.insert(Var::V, v_choice(seed));
                for i in 1..=n {
                    values.insert(Var::u(i), random_ratio(&mut rng));
                }
            }
            GeneratorSet::Classical(n) => {
                for i in 1..=n {
                    values.insert(Var::lambda(i), random_ratio(&mut rng));
                }
            }
        }
        Specialization { values, seed }
    }

    /// First draw from `seed, seed+1, ...` accepted by `accept`.
    pub fn draw_where(
        gens: GeneratorSet,
        seed: u64,
        mut accept: impl FnMut(&Specialization) -> bool,
    ) -> Result<Self> {
        for k in 0..=MAX_REDRAWS {
            let sp = Specialization::draw(gens, seed.wrapping_add(k));
            if accept(&sp) {
                return Ok(sp);
            }
        }
        Err(Error::Singular(format!(
            "no usable specialization among seeds {seed}..={}",
            seed.wrapping_add(MAX_REDRAWS)
        )))
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn value(&self, x: Var) -> BigRational {
        self.values
            .get(&x)
            .cloned()
            .unwrap_or_else(|| panic!("generator {} is not specialized", x.name()))
    }

    pub fn values(&self) -> &BTreeMap<Var, BigRational> {
        &self.values
    }

    /// Whether the product `prod U_c` over `colors` equals `+-v^m` for an integer `m`.
    fn is_integral_weight(&self, colors: &[usize]) -> bool {
        let p = colors
            .iter()
            .fold(BigRational::one(), |acc, &c| acc * self.value(Var::u(c)));
        let p = p.abs();
        let v = self.value(Var::V).abs();
        let height = |x: &BigRational| x.numer().bits().max(x.denom().bits());
        let limit = height(&p);
        let mut pw = BigRational::one();
        loop {
            if pw == p || pw.recip() == p {
                return true;
            }
            if height(&pw) > limit {
                return false;
            }
            pw *= &v;
        }
    }

    /// Quantum admissibility of the weights attached to `strand_colors`: some
    /// ordering of the strands has no partial product of the `U`s equal to
    /// `+-v^m`.
    pub fn is_admissible(&self, strand_colors: &[usize]) -> bool {
        let n = strand_colors.len();
        assert!(n <= 20, "too many strands for the subset search");
        let mut good = vec![false; 1 << n];
        good[0] = true;
        for set in 1usize..(1 << n) {
            let chosen: Vec<usize> = (0..n).filter(|i| set >> i & 1 == 1).map(|i| strand_colors[i]).collect();
            if self.is_integral_weight(&chosen) {
                continue;
            }
            good[set] = (0..n).any(|i| set >> i & 1 == 1 && good[set & !(1 << i)]);
        }
        good[(1 << n) - 1]
    }
}

/// Evaluates `x`; a vanishing denominator is reported as singular.
pub fn specialize(x: &FieldElement, sp: &Specialization) -> Result<BigRational> {
    x.eval(|y| sp.value(y))
        .ok_or_else(|| Error::Singular(format!("denominator of {x} vanishes at seed {}", sp.seed)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{parse_field_element, qnum, QArg};

    fn sp(pairs: &[(Var, BigRational)]) -> Specialization {
        Specialization::from_values(pairs.iter().cloned().collect(), 0).unwrap()
    }

    #[test]
    fn evaluates() {
        let s = sp(&[(Var::V, ratio(2, 1)), (Var::u(1), ratio(3, 1))]);
        let x = parse_field_element("v + v^-1").unwrap();
        assert_eq!(specialize(&x, &s).unwrap(), ratio(5, 2));
        let q = qnum(GeneratorSet::Quantum(1), QArg::Weight { color: 1, shift: 0 }).unwrap();
        assert_eq!(specialize(&q, &s).unwrap(), ratio(16, 9));
    }

    #[test]
    fn pole_is_singular() {
        let mut values = BTreeMap::new();
        values.insert(Var::lambda(1), ratio(1, 1));
        let s = Specialization::from_values(values, 0).unwrap();
        let x = parse_field_element("1/(l1 - 1)").unwrap();
        assert!(matches!(specialize(&x, &s), Err(Error::Singular(_))));
        assert!(Specialization::from_values([(Var::V, ratio(1, 1))].into_iter().collect(), 0).is_err());
    }

    #[test]
    fn draws_are_deterministic() {
        let g = GeneratorSet::Quantum(3);
        assert_eq!(Specialization::draw(g, 11), Specialization::draw(g, 11));
        assert_ne!(Specialization::draw(g, 11), Specialization::draw(g, 12));
    }

    #[test]
    fn admissibility() {
        let s = sp(&[(Var::V, ratio(2, 1)), (Var::u(1), ratio(4, 1)), (Var::u(2), ratio(3, 1))]);
        assert!(!s.is_admissible(&[1]));
        assert!(s.is_admissible(&[2]));
        assert!(s.is_admissible(&[2, 1]));
        assert!(s.is_admissible(&[1, 2]));
        let t = sp(&[(Var::V, ratio(2, 1)), (Var::u(1), ratio(3, 1)), (Var::u(2), ratio(2, 3))]);
        // The total weight 3 * 2/3 = v is integral, whatever the order.
        assert!(!t.is_admissible(&[1, 2]));
        assert!(t.is_admissible(&[1]));
    }
}
