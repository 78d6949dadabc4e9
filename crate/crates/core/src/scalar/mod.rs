//! Ground fields, quantum combinatorial scalars and numeric specialization.

mod field;
mod gcd;
mod params;
mod parse;
mod poly;
mod special;
mod specialization;

use std::fmt::{Debug, Display};

use num::{BigInt, BigRational, One, Zero};

pub use field::{FieldElement, GeneratorSet};
pub use gcd::gcd;
pub use params::{QuantumParams, Specialized, Symbolic};
pub use parse::parse_field_element;
pub use poly::{Mono, Poly, Var};
pub use special::{
    multinomial, multinomial_product_form, pochhammer, qfact, qbinom, qfact_qbinom, qnum, QArg,
};
pub use specialization::{specialize, Specialization, MAX_REDRAWS};

/// Commutative ring operations used by the sparse vector and matrix code.
pub trait Ring: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(k: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv().expect("division by zero"))
    }
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn from_i64(k: i64) -> Self {
        Poly::constant(BigInt::from(k))
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Poly::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        Poly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Poly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Poly::mul(self, other)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(k: i64) -> Self {
        BigRational::from_integer(BigInt::from(k))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}
