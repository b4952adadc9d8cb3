//! The Lie superalgebra `gl(m|n)` and its universal enveloping algebra.
//!
//! Indices `0..m` are even and `m..m+n` are odd; they print as `1..m` and
//! `1b..nb`. Generators are pairs `(i, j)` standing for `E_{i,j}`.

mod hc;
mod pbw;
mod text;
mod uea;

use std::fmt;

use crate::error::{Error, Result};

pub use hc::{cartan_context, gd_element, hc_project, omega_cartan, q_projection, a_context, HcSign};
pub use pbw::{PbwNormalizer, PbwOrder};
pub use text::parse_uea;
pub use uea::{bracket, gelfand_element, omega, supercommutator, Gen, UEAElement, Word};

/// Dimensions `(m|n)` of the defining superspace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperDims {
    pub m: usize,
    pub n: usize,
}

impl SuperDims {
    pub fn new(m: usize, n: usize) -> Self {
        SuperDims { m, n }
    }

    pub fn size(&self) -> usize {
        self.m + self.n
    }

    pub fn is_odd(&self, i: usize) -> bool {
        i >= self.m
    }

    /// `|i|` as 0 or 1.
    pub fn parity(&self, i: usize) -> u8 {
        u8::from(self.is_odd(i))
    }

    pub fn gen_parity(&self, (i, j): Gen) -> u8 {
        (self.parity(i as usize) + self.parity(j as usize)) % 2
    }

    pub fn label(&self, i: usize) -> String {
        if i < self.m {
            format!("{}", i + 1)
        } else {
            format!("{}b", i - self.m + 1)
        }
    }

    pub fn parse_label(&self, s: &str) -> Result<usize> {
        let bad = || Error::Parse(format!("bad index {s:?} for gl({}|{})", self.m, self.n));
        let s = s.trim();
        let (digits, odd) = match s.strip_suffix('b') {
            Some(d) => (d, true),
            None => (s, false),
        };
        let k: usize = digits.parse().map_err(|_| bad())?;
        if k == 0 {
            return Err(bad());
        }
        match odd {
            false if k <= self.m => Ok(k - 1),
            true if k <= self.n => Ok(self.m + k - 1),
            _ => Err(bad()),
        }
    }

    pub fn generators(&self) -> Vec<Gen> {
        let s = self.size() as u8;
        (0..s).flat_map(|i| (0..s).map(move |j| (i, j))).collect()
    }

    /// `E_{1,2}, .., E_{m-1,m}, E_{m,1b}, E_{1b,2b}, ..`: simple root vectors
    /// of the distinguished Borel.
    pub fn simple_positive(&self) -> Vec<Gen> {
        let s = self.size() as u8;
        (1..s).map(|i| (i - 1, i)).collect()
    }

    pub fn simple_negative(&self) -> Vec<Gen> {
        self.simple_positive().into_iter().map(|(i, j)| (j, i)).collect()
    }
}

impl fmt::Display for SuperDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gl({}|{})", self.m, self.n)
    }
}
