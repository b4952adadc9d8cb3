use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1, .., 2d}`, stored 0-based in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperPerm(Vec<usize>);

impl SuperPerm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &v in &images {
            if v >= images.len() || seen[v] {
                return Err(Error::InvalidInput(format!("{images:?} is not a permutation")));
            }
            seen[v] = true;
        }
        Ok(SuperPerm(images))
    }

    /// From 1-based images.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidInput("images are 1-based".into()));
        }
        Self::new(images.iter().map(|v| v - 1).collect())
    }

    /// Parses one-line notation such as `"2,1,4,3"`.
    pub fn parse(s: &str) -> Result<Self> {
        let v = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad image {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_one_based(&v)
    }

    pub fn identity(n: usize) -> Self {
        SuperPerm((0..n).collect())
    }

    /// Product of disjoint or overlapping cycles given 1-based, applied
    /// right to left.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut p = Self::identity(n);
        for c in cycles.iter().rev() {
            let mut img: Vec<usize> = (0..n).collect();
            for (k, &a) in c.iter().enumerate() {
                let b = c[(k + 1) % c.len()];
                if a == 0 || a > n || b == 0 || b > n {
                    return Err(Error::InvalidInput(format!("cycle entry out of range 1..={n}")));
                }
                img[a - 1] = b - 1;
            }
            p = SuperPerm::new(img)?.compose(&p);
        }
        Ok(p)
    }

    /// The cycle `(2a+2, 2a+4, .., 2b)` in `S_{2d}`.
    pub fn tau(size: usize, a: usize, b: usize) -> Self {
        let cyc: Vec<usize> = (a + 1..=b).map(|k| 2 * k).collect();
        Self::from_cycles(size, &[cyc]).expect("cycle within range")
    }

    /// `τ_{d_0,d_1} ⋯ τ_{d_{r-1},d_r}` for consecutive blocks of the given
    /// lengths.
    pub fn block_cycles(lengths: &[usize]) -> Self {
        let size = 2 * lengths.iter().sum::<usize>();
        let mut p = Self::identity(size);
        let mut a = 0;
        for &l in lengths {
            p = p.compose(&Self::tau(size, a, a + l));
            a += l;
        }
        p
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn at(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &SuperPerm) -> SuperPerm {
        assert_eq!(self.len(), other.len(), "permutation sizes differ");
        SuperPerm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> SuperPerm {
        let mut v = vec![0; self.len()];
        for (i, &j) in self.0.iter().enumerate() {
            v[j] = i;
        }
        SuperPerm(v)
    }

    /// Membership in the centralizer of `(1,2)(3,4)⋯(2d-1,2d)`.
    pub fn in_h(&self) -> bool {
        (0..self.len()).all(|i| self.0[i ^ 1] == self.0[i] ^ 1)
    }

    /// All permutations of `{0..n}` in lexicographic order.
    pub fn all(n: usize) -> Vec<SuperPerm> {
        let mut out = Vec::new();
        let mut p: Vec<usize> = (0..n).collect();
        loop {
            out.push(SuperPerm(p.clone()));
            let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
                return out;
            };
            let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
            p.swap(i - 1, j);
            p[i..].reverse();
        }
    }

    /// Elements of the centralizer subgroup of size `2^d d!`.
    pub fn h_group(d: usize) -> Vec<SuperPerm> {
        let mut out = Vec::new();
        for outer in SuperPerm::all(d) {
            for flips in 0..(1usize << d) {
                let mut v = vec![0; 2 * d];
                for s in 0..d {
                    let t = outer.0[s];
                    let f = (flips >> s) & 1;
                    v[2 * s] = 2 * t + f;
                    v[2 * s + 1] = 2 * t + (1 - f);
                }
                out.push(SuperPerm(v));
            }
        }
        out
    }

    /// Cycles in 0-based form, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            let mut c = Vec::new();
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                c.push(i);
                i = self.0[i];
            }
            out.push(c);
        }
        out
    }
}

impl fmt::Display for SuperPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|i| (i + 1).to_string()).collect();
        f.write_str(&v.join(","))
    }
}
