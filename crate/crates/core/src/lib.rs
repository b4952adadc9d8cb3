//! Exact computer algebra for Capelli operators on the symmetric square of
//! `C^{m|n}`: central elements of `gl(m|n)`, Harish-Chandra projections,
//! invariant differential operators, and the eigenvalue and interpolation
//! polynomials attached to hook partitions.
//!
//! Everything is computed over exact rationals; there is no floating point
//! anywhere in the crate.

pub mod capelli;
pub mod error;
pub mod exactmath;
pub mod hooks;
pub mod superlie;
pub mod weyl;

pub use error::{Error, Result};
