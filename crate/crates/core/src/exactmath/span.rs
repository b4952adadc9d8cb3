use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::rational::Rational;

/// Sparse vector keyed by an ordered coordinate type.
pub type SparseVec<K> = BTreeMap<K, Rational>;

/// Incrementally maintained reduced row-echelon basis of a span of sparse
/// vectors. Each stored row has leading coefficient 1 at its pivot and no
/// other row has a nonzero entry there.
#[derive(Clone, Debug)]
pub struct SparseEchelon<K: Ord + Clone> {
    rows: Vec<(K, SparseVec<K>)>,
}

impl<K: Ord + Clone> Default for SparseEchelon<K> {
    fn default() -> Self {
        SparseEchelon { rows: Vec::new() }
    }
}

fn axpy<K: Ord + Clone>(v: &mut SparseVec<K>, c: &Rational, row: &SparseVec<K>) {
    for (k, x) in row {
        let e = v.entry(k.clone()).or_insert_with(Rational::zero);
        *e += c * x;
        if e.is_zero() {
            v.remove(k);
        }
    }
}

impl<K: Ord + Clone> SparseEchelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> impl Iterator<Item = &SparseVec<K>> {
        self.rows.iter().map(|(_, r)| r)
    }

    /// Remainder of `v` after eliminating every stored pivot.
    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut v = v.clone();
        for (p, row) in &self.rows {
            if let Some(c) = v.get(p).cloned() {
                axpy(&mut v, &-c, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns `true` when the rank grew.
    pub fn insert(&mut self, v: &SparseVec<K>) -> bool {
        let mut r = self.reduce(v);
        let Some((p, lead)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        if !lead.is_one() {
            let inv = lead.recip();
            for x in r.values_mut() {
                *x *= &inv;
            }
        }
        for (_, row) in self.rows.iter_mut() {
            if let Some(c) = row.get(&p).cloned() {
                axpy(row, &-c, &r);
            }
        }
        self.rows.push((p, r));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rint;

    fn v(entries: &[(u32, i64)]) -> SparseVec<u32> {
        entries.iter().map(|&(k, c)| (k, rint(c))).collect()
    }

    #[test]
    fn incremental_rank() {
        let mut e = SparseEchelon::new();
        assert!(e.insert(&v(&[(0, 1), (1, 2)])));
        assert!(e.insert(&v(&[(1, 1), (2, 1)])));
        assert!(!e.insert(&v(&[(0, 1), (1, 3), (2, 1)])));
        assert!(!e.insert(&v(&[])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&v(&[(0, 2), (1, 4)])));
        assert!(!e.contains(&v(&[(2, 1)])));
    }
}
