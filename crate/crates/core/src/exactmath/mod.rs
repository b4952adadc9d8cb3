//! Exact rationals, sparse multivariate polynomials and dense rational
//! linear algebra.

mod affine;
mod matrix;
mod poly;
mod rational;
mod span;

pub use affine::{AffineForm, AffineSubstitution};
pub use matrix::{lin_solve, RationalMatrix, Reduction, Solution};
pub use poly::{Context, Monomial, MultiPoly, PolyJson, TermJson};
pub use rational::{fmt_rational, parse_rational, rat, rational_short, rint, Rational};
pub use span::{SparseEchelon, SparseVec};
