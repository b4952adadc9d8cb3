//! The super Weyl algebra of polynomial differential operators on
//! `W = S^2(C^{m|n})`, its polarization actions, and the invariant
//! operators built from it.
//!
//! Coordinates on `W` are `y_{i,j}` with `y_{i,j} = (-1)^{|i||j|} y_{j,i}`;
//! the matching derivations are `∂_{i,j}`, and `x_{i,j}` spans `W` itself.
//! Only canonical pairs `i <= j` are stored; `y_{i,i}` vanishes for odd `i`.

mod capelli_op;
mod element;
mod graded;
mod highest;
mod perm;
mod rho;
mod spherical;
mod tsigma;

use std::fmt;

use num_traits::Zero;

use crate::exactmath::{rint, Rational};
use crate::superlie::SuperDims;

pub use capelli_op::{capelli_operator, CapelliData, Decomposition};
pub use element::WeylElement;
pub use graded::{apply, GradedPieceBasis, WPoly};
pub use highest::{cyclic_span_dim, highest_weight_vectors, mono_weight};
pub use perm::SuperPerm;
pub use rho::{rho_action, rho_check, x_var, RhoCheck};
pub use spherical::{beta_star, iota_a_images, k_spanning_set, spherical_poly, spherical_vector};
pub use tsigma::{block_invariants, invariant_kernel_dim, invariant_symbol_space, t_sigma, InvariantSpace};

/// Exponent vector over the canonical generators; odd entries are 0 or 1.
pub type WMono = Vec<u8>;

/// Generator table of `W` for a fixed `gl(m|n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WModel {
    dims: SuperDims,
    gens: Vec<(u8, u8)>,
    odd: Vec<bool>,
    table: Vec<Option<usize>>,
}

impl WModel {
    pub fn new(dims: SuperDims) -> Self {
        let s = dims.size();
        let mut gens = Vec::new();
        let mut table = vec![None; s * s];
        for i in 0..s {
            for j in i..s {
                if i == j && dims.is_odd(i) {
                    continue;
                }
                table[i * s + j] = Some(gens.len());
                table[j * s + i] = Some(gens.len());
                gens.push((i as u8, j as u8));
            }
        }
        let odd = gens.iter().map(|&g| dims.gen_parity(g) == 1).collect();
        WModel { dims, gens, odd, table }
    }

    pub fn dims(&self) -> SuperDims {
        self.dims
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn gen(&self, g: usize) -> (usize, usize) {
        let (i, j) = self.gens[g];
        (i as usize, j as usize)
    }

    pub fn is_odd(&self, g: usize) -> bool {
        self.odd[g]
    }

    /// Canonical generator of the pair `(i, j)` and whether the
    /// identification carries a minus sign; `None` for odd diagonals.
    pub fn index(&self, i: usize, j: usize) -> Option<(usize, bool)> {
        let g = self.table[i * self.dims.size() + j]?;
        let neg = i > j && self.dims.is_odd(i) && self.dims.is_odd(j);
        Some((g, neg))
    }

    /// `<y_g, x_g>`: 2 on even diagonals, 1 otherwise.
    pub fn pairing(&self, g: usize) -> Rational {
        let (i, j) = self.gens[g];
        if i == j {
            rint(2)
        } else {
            rint(1)
        }
    }

    pub fn unit(&self, g: usize) -> WMono {
        let mut e = vec![0; self.gens.len()];
        e[g] = 1;
        e
    }

    pub fn zero_mono(&self) -> WMono {
        vec![0; self.gens.len()]
    }

    pub fn mono_parity(&self, e: &[u8]) -> u8 {
        (e.iter().zip(&self.odd).filter(|(&x, &o)| o && x % 2 == 1).count() % 2) as u8
    }

    /// Number of odd generators in `e` strictly before index `g`.
    pub(crate) fn odd_before(&self, e: &[u8], g: usize) -> usize {
        e[..g].iter().zip(&self.odd).filter(|(&x, &o)| o && x > 0).count()
    }

    /// Product of two monomials in canonical order; the flag is the sign.
    pub fn mono_mul(&self, a: &[u8], b: &[u8]) -> Option<(bool, WMono)> {
        let mut neg = false;
        let mut odd_after = 0usize;
        for g in (0..a.len()).rev() {
            if self.odd[g] {
                if a[g] > 0 && b[g] > 0 {
                    return None;
                }
                if b[g] > 0 && odd_after % 2 == 1 {
                    neg = !neg;
                }
                if a[g] > 0 {
                    odd_after += 1;
                }
            }
        }
        Some((neg, a.iter().zip(b).map(|(x, y)| x + y).collect()))
    }

    pub fn gen_label(&self, g: usize) -> String {
        let (i, j) = self.gen(g);
        format!("{},{}", self.dims.label(i), self.dims.label(j))
    }

    pub(crate) fn render_mono(&self, letter: &str, e: &[u8]) -> String {
        let mut s = String::new();
        for (g, &k) in e.iter().enumerate() {
            if k == 0 {
                continue;
            }
            s.push_str(&format!("{letter}({})", self.gen_label(g)));
            if k > 1 {
                s.push_str(&format!("^{k}"));
            }
        }
        s
    }
}

impl fmt::Display for WModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S^2 of C^({}|{})", self.dims.m, self.dims.n)
    }
}

pub(crate) fn sign(neg: bool) -> Rational {
    if neg {
        -rint(1)
    } else {
        rint(1)
    }
}

pub(crate) fn add_into<K: Ord>(map: &mut std::collections::BTreeMap<K, Rational>, k: K, c: Rational) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match map.entry(k) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_table() {
        let m = WModel::new(SuperDims::new(1, 2));
        // (1,1), (1,1b), (1,2b), (1b,2b)
        assert_eq!(m.num_gens(), 4);
        assert_eq!(m.index(2, 1), Some((3, true)));
        assert_eq!(m.index(1, 0), Some((1, false)));
        assert_eq!(m.index(1, 1), None);
        assert!(m.is_odd(1) && !m.is_odd(3));
        assert_eq!(m.pairing(0), rint(2));
    }

    #[test]
    fn odd_monomials_anticommute() {
        let m = WModel::new(SuperDims::new(1, 2));
        let a = m.unit(1);
        let b = m.unit(2);
        let (s1, ab) = m.mono_mul(&a, &b).unwrap();
        let (s2, ba) = m.mono_mul(&b, &a).unwrap();
        assert_eq!(ab, ba);
        assert_ne!(s1, s2);
        assert!(m.mono_mul(&a, &a).is_none());
    }
}
