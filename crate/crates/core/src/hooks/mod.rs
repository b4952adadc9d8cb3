//! Hook partitions and the weight and Frobenius coordinates attached to them.
//!
//! Two families share this module. For `Theta::Half` the partitions label
//! the `gl(m|2n)`-modules occurring in polynomials on `S^2(C^{m|2n})`; for
//! `Theta::One` they label the `gl(m|n)` family.

mod frobenius;
mod weight;

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::exactmath::{rat, rint, Rational};

pub use frobenius::{frobenius_affine_map, frobenius_context, frobenius_point, frobenius_transform, FrobeniusPoint};
pub use weight::{dual_weight, dual_weight_with_cap, gamma_map, gamma_star_map, weight_context, Frame, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theta {
    Half,
    One,
}

impl fmt::Display for Theta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theta::Half => "1/2",
            Theta::One => "1",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HookParams {
    pub m: usize,
    pub n: usize,
    pub theta: Theta,
}

impl HookParams {
    pub fn half(m: usize, n: usize) -> Self {
        HookParams { m, n, theta: Theta::Half }
    }

    pub fn one(m: usize, n: usize) -> Self {
        HookParams { m, n, theta: Theta::One }
    }

    /// Odd dimension of the defining superspace `V`.
    pub fn odd_dim(&self) -> usize {
        match self.theta {
            Theta::Half => 2 * self.n,
            Theta::One => self.n,
        }
    }
}

/// A partition `b` with `b_{m+1} <= n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HookPartition {
    parts: Vec<u32>,
    params: HookParams,
}

impl HookPartition {
    pub fn new(parts: Vec<u32>, params: HookParams) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!("{parts:?} is not a partition")));
        }
        if parts.get(params.m).copied().unwrap_or(0) as usize > params.n {
            return Err(Error::InvalidInput(format!(
                "{parts:?} is not an ({}|{})-hook partition",
                params.m, params.n
            )));
        }
        Ok(HookPartition { parts, params })
    }

    /// Parses `"2,1"`; the empty string is the empty partition.
    pub fn parse(s: &str, params: HookParams) -> Result<Self> {
        let s = s.trim();
        let parts = if s.is_empty() || s == "()" {
            Vec::new()
        } else {
            s.split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad part {t:?}"))))
                .collect::<Result<Vec<_>>>()?
        };
        Self::new(parts, params)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn params(&self) -> HookParams {
        self.params
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `b_k` with 1-based `k`, zero past the end.
    pub fn part(&self, k: usize) -> u32 {
        if k == 0 {
            return 0;
        }
        self.parts.get(k - 1).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Vec<u32> {
        transpose(&self.parts)
    }

    /// `b*_l = max(b'_l - m, 0)`, 1-based.
    pub fn star(&self, l: usize) -> u32 {
        let t = self.transpose();
        let bl = t.get(l - 1).copied().unwrap_or(0);
        bl.saturating_sub(self.params.m as u32)
    }

    /// `H(b) = prod (b_k - l + 1 + (b'_l - k)/2)` over the boxes `(k, l)`.
    pub fn hook_product_h(&self) -> Rational {
        let t = self.transpose();
        let mut h = Rational::one();
        for (k0, &bk) in self.parts.iter().enumerate() {
            let k = k0 as i64 + 1;
            for l in 1..=bk as i64 {
                let bl = t[(l - 1) as usize] as i64;
                h *= rint(bk as i64 - l + 1) + rat(bl - k, 2);
            }
        }
        h
    }

    /// Product of the classical hook lengths.
    pub fn classical_hook_product(&self) -> u64 {
        let t = self.transpose();
        let mut h = 1u64;
        for (k, &bk) in self.parts.iter().enumerate() {
            for l in 0..bk as usize {
                let arm = bk as u64 - l as u64 - 1;
                let leg = t[l] as u64 - k as u64 - 1;
                h *= arm + leg + 1;
            }
        }
        h
    }
}

impl fmt::Display for HookPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", p.join(","))
    }
}

pub fn transpose(parts: &[u32]) -> Vec<u32> {
    let w = parts.first().copied().unwrap_or(0);
    (1..=w)
        .map(|k| parts.iter().filter(|&&p| p >= k).count() as u32)
        .collect()
}

/// Partitions of `d` from `(d)` down to `(1,...,1)`.
pub fn partitions(d: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, &mut Vec::new(), &mut out);
    out
}

/// All hook partitions of size `d` (or of every size up to `d`), graded and
/// reverse-lexicographic within each size.
pub fn enumerate_hooks(params: HookParams, d: u32, upto: bool) -> Vec<HookPartition> {
    let sizes = if upto { 0..=d } else { d..=d };
    sizes
        .flat_map(partitions)
        .filter_map(|p| HookPartition::new(p, params).ok())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transpose_examples() {
        assert_eq!(transpose(&[2, 1]), vec![2, 1]);
        assert_eq!(transpose(&[]), Vec::<u32>::new());
        assert_eq!(transpose(&[3]), vec![1, 1, 1]);
    }

    #[test]
    fn enumeration_examples() {
        let h = enumerate_hooks(HookParams::half(1, 1), 3, false);
        let parts: Vec<&[u32]> = h.iter().map(|b| b.parts()).collect();
        assert_eq!(parts, vec![&[3][..], &[2, 1], &[1, 1, 1]]);
        assert_eq!(enumerate_hooks(HookParams::half(2, 1), 3, false).len(), 3);
        let empty = enumerate_hooks(HookParams::half(3, 0), 0, false);
        assert_eq!(empty.len(), 1);
        assert!(empty[0].parts().is_empty());
        // (2,2) is not a (1|1)-hook
        assert_eq!(enumerate_hooks(HookParams::half(1, 1), 4, false).len(), 4);
        assert_eq!(enumerate_hooks(HookParams::half(1, 1), 2, true).len(), 4);
    }

    #[test]
    fn hook_products() {
        let p = HookParams::half(1, 1);
        let b = |s: &str| HookPartition::parse(s, p).unwrap();
        assert_eq!(b("1").hook_product_h(), rint(1));
        assert_eq!(b("2,1").hook_product_h(), rat(5, 2));
        assert_eq!(b("").hook_product_h(), rint(1));
        assert_eq!(b("2,1").classical_hook_product(), 3);
        assert_eq!(b("1").classical_hook_product(), 1);
        assert_eq!(b("2").classical_hook_product(), 2);
    }

    #[test]
    fn rejects_non_hooks() {
        assert!(HookPartition::parse("2,2", HookParams::half(1, 1)).is_err());
        assert!(HookPartition::parse("1,2", HookParams::half(2, 2)).is_err());
        assert!(HookPartition::parse("a", HookParams::half(2, 2)).is_err());
    }
}
