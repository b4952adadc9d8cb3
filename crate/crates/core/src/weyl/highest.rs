use std::collections::{BTreeMap, VecDeque};

use num_traits::One;

use super::graded::{GradedPieceBasis, WPoly};
use super::rho::RhoCheck;
use super::{WModel, WMono};
use crate::exactmath::{rint, Rational, RationalMatrix, SparseEchelon};

/// Weight of `y^e` under `ρ̌`: each `y_{i,j}` has weight `-ε_i - ε_j`.
pub fn mono_weight(model: &WModel, e: &[u8]) -> Vec<i64> {
    let mut w = vec![0i64; model.dims().size()];
    for (g, &k) in e.iter().enumerate() {
        if k > 0 {
            let (i, j) = model.gen(g);
            w[i] -= k as i64;
            w[j] -= k as i64;
        }
    }
    w
}

/// Basis of the vectors in `𝒫^k(W)` of weight `mu` (coordinates on the
/// diagonal `E_{i,i}`) killed by every simple raising operator.
pub fn highest_weight_vectors(rho: &RhoCheck, k: usize, mu: &[Rational]) -> Vec<WPoly> {
    let model = rho.model();
    let basis = GradedPieceBasis::new(model, k);
    let space: Vec<WMono> = basis
        .monomials()
        .iter()
        .filter(|e| {
            let w = mono_weight(model, e);
            w.len() == mu.len() && w.iter().zip(mu).all(|(a, b)| rint(*a) == *b)
        })
        .cloned()
        .collect();
    if space.is_empty() {
        return Vec::new();
    }
    let mut rows: BTreeMap<(usize, WMono), usize> = BTreeMap::new();
    let mut entries = Vec::new();
    for (gi, g) in model.dims().simple_positive().into_iter().enumerate() {
        let op = rho.generator(g);
        for (j, e) in space.iter().enumerate() {
            let img = op.apply_poly(&WPoly::monomial(model, e.clone(), Rational::one()));
            for (f, c) in img.terms() {
                let n = rows.len();
                let r = *rows.entry((gi, f.clone())).or_insert(n);
                entries.push((r, j, c.clone()));
            }
        }
    }
    let mut mat = RationalMatrix::zeros(rows.len(), space.len());
    for (r, j, c) in entries {
        mat.set(r, j, c);
    }
    mat.reduce()
        .kernel
        .into_iter()
        .map(|v| {
            let mut p = WPoly::zero(model);
            for (e, c) in space.iter().zip(v) {
                p.add_term(e.clone(), c);
            }
            p
        })
        .collect()
}

/// Dimension of `U(𝔫^-) v`, by closing under the simple lowering operators.
pub fn cyclic_span_dim(rho: &RhoCheck, v: &WPoly) -> usize {
    let lowering: Vec<_> = rho.model().dims().simple_negative();
    let mut ech = SparseEchelon::new();
    let mut queue = VecDeque::new();
    if ech.insert(v.terms()) {
        queue.push_back(v.clone());
    }
    while let Some(w) = queue.pop_front() {
        for &g in &lowering {
            let img = rho.generator(g).apply_poly(&w);
            if ech.insert(img.terms()) {
                queue.push_back(img);
            }
        }
    }
    ech.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    use crate::superlie::SuperDims;

    #[test]
    fn rank_one_highest_weight() {
        let m = Arc::new(WModel::new(SuperDims::new(1, 0)));
        let rho = RhoCheck::new(&m);
        let v = highest_weight_vectors(&rho, 3, &[rint(-6)]);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].render("y"), "y(1,1)^3");
        assert!(highest_weight_vectors(&rho, 3, &[rint(-4)]).is_empty());
    }

    #[test]
    fn diagonal_action_matches_weights() {
        let m = Arc::new(WModel::new(SuperDims::new(1, 2)));
        let rho = RhoCheck::new(&m);
        for e in GradedPieceBasis::new(&m, 2).monomials() {
            let w = mono_weight(&m, e);
            let p = WPoly::monomial(&m, e.clone(), Rational::one());
            for i in 0..3u8 {
                let img = rho.generator((i, i)).apply_poly(&p);
                assert_eq!(img, p.scale(&rint(w[i as usize])));
            }
        }
    }
}
