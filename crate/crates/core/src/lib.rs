//! Exact computations with dual Verma modules for quantum and classical
//! `gl(2)`, their commuting `gl(n)` actions, R-matrices, and the colored
//! Lawrence-Krammer-Bigelow representations of braid groups.

pub mod braid;
pub mod error;
pub mod gtbasis;
pub mod linalg;
pub mod lkb;
pub mod qgroup;
pub mod scalar;
pub mod sparse;
pub mod verma;

pub use error::{Error, Result};
