use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::{rational_short, Rational};
use crate::error::{Error, Result};

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::LengthMismatch { expected: c, got: row.len() });
            }
            data.extend(row);
        }
        Ok(RationalMatrix { rows: r, cols: c, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch { expected: self.cols, got: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn rank(&self) -> usize {
        self.reduce().rank
    }

    /// Reduced row-echelon data. Rows are first cleared of denominators and
    /// eliminated fraction-free (Bareiss); only the final back-substitution
    /// works over the rationals.
    pub fn reduce(&self) -> Reduction {
        let (echelon, pivots) = bareiss_echelon(self);
        let rank = pivots.len();
        let mut rref: Vec<Vec<Rational>> = echelon
            .into_iter()
            .take(rank)
            .map(|row| row.into_iter().map(Rational::from_integer).collect())
            .collect();
        for (r, &c) in pivots.iter().enumerate() {
            let inv = rref[r][c].recip();
            for v in rref[r].iter_mut() {
                if !v.is_zero() {
                    *v *= &inv;
                }
            }
        }
        for (r, &c) in pivots.iter().enumerate().rev() {
            let pivot_row = rref[r].clone();
            for rr in rref.iter_mut().take(r) {
                let f = rr[c].clone();
                if f.is_zero() {
                    continue;
                }
                for (v, p) in rr.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *v -= &f * p;
                    }
                }
            }
        }
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut kernel = Vec::new();
        for free in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -rref[r][free].clone();
            }
            kernel.push(v);
        }
        let mut reduced = RationalMatrix::zeros(self.rows, self.cols);
        for (r, row) in rref.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                reduced.set(r, j, v);
            }
        }
        Reduction { rank, pivots, reduced, kernel }
    }
}

#[derive(Clone, Debug)]
pub struct Reduction {
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub reduced: RationalMatrix,
    pub kernel: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug)]
pub struct Solution {
    pub particular: Vec<Rational>,
    pub kernel: Vec<Vec<Rational>>,
}

fn integer_rows(m: &RationalMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows)
        .map(|i| {
            let row = m.row(i);
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter()
                .map(|q| q.numer() * (&l / q.denom()))
                .collect()
        })
        .collect()
}

fn bareiss_echelon(m: &RationalMatrix) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut a: Vec<Vec<BigInt>> = integer_rows(m)
        .into_iter()
        .filter(|r| r.iter().any(|v| !v.is_zero()))
        .collect();
    let rows = a.len();
    let cols = m.cols;
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pv = pivot_row[c].clone();
        for row in tail.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..cols {
                let t = &pv * &row[j] - &f * &pivot_row[j];
                row[j] = if prev.is_one() { t } else { t / &prev };
            }
            row[c] = BigInt::zero();
        }
        prev = pv;
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Solve `m x = rhs`; returns one solution and a kernel basis.
pub fn lin_solve(m: &RationalMatrix, rhs: &[Rational]) -> Result<Solution> {
    if rhs.len() != m.rows {
        return Err(Error::LengthMismatch { expected: m.rows, got: rhs.len() });
    }
    let mut aug = RationalMatrix::zeros(m.rows, m.cols + 1);
    for i in 0..m.rows {
        for j in 0..m.cols {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, m.cols, rhs[i].clone());
    }
    let red = aug.reduce();
    if red.pivots.last() == Some(&m.cols) {
        return Err(Error::Inconsistent);
    }
    let mut x = vec![Rational::zero(); m.cols];
    for (r, &c) in red.pivots.iter().enumerate() {
        x[c] = red.reduced.get(r, m.cols).clone();
    }
    let kernel = red
        .kernel
        .into_iter()
        .filter(|v| v[m.cols].is_zero())
        .map(|mut v| {
            v.pop();
            v
        })
        .collect();
    if cfg!(debug_assertions) {
        assert_eq!(m.mul_vec(&x)?, rhs, "lin_solve back-substitution");
    }
    Ok(Solution { particular: x, kernel })
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let r: Vec<String> = self.row(i).iter().map(rational_short).collect();
            writeln!(f, "  [{}]", r.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, rint};

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| rint(v)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn ranks() {
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(RationalMatrix::identity(4).reduce().kernel.len(), 0);
        assert_eq!(m(&[&[1, 1], &[1, -1]]).rank(), 2);
    }

    #[test]
    fn kernel_spans_null_space() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 7, 9], &[0, 0, 1, 1]]);
        let red = a.reduce();
        assert_eq!(red.rank, 2);
        assert_eq!(red.kernel.len(), 2);
        for v in &red.kernel {
            assert!(a.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn solve_examples() {
        let s = lin_solve(&RationalMatrix::identity(2), &[rat(1, 3), rint(2)]).unwrap();
        assert_eq!(s.particular, vec![rat(1, 3), rint(2)]);
        let s = lin_solve(&m(&[&[1, 1]]), &[rint(2)]).unwrap();
        assert_eq!(s.kernel.len(), 1);
        assert_eq!(lin_solve(&m(&[&[1], &[1]]), &[rint(1), rint(2)]).unwrap_err(), Error::Inconsistent);
    }

    #[test]
    fn fractional_entries() {
        let a = RationalMatrix::from_rows(vec![
            vec![rat(1, 2), rat(1, 3), rint(0)],
            vec![rat(1, 4), rat(-2, 5), rint(1)],
            vec![rint(1), rat(2, 3), rint(0)],
        ])
        .unwrap();
        let red = a.reduce();
        assert_eq!(red.rank, 2);
        assert!(a.mul_vec(&red.kernel[0]).unwrap().iter().all(Zero::is_zero));
    }
}
