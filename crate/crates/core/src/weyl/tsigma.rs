use std::collections::BTreeMap;
use std::sync::Arc;

use super::graded::GradedPieceBasis;
use super::highest::mono_weight;
use super::perm::SuperPerm;
use super::rho::RhoCheck;
use super::{add_into, sign, WModel, WMono, WeylElement};
use crate::error::{Error, Result};
use crate::exactmath::{rat, RationalMatrix, SparseEchelon, SparseVec};
use crate::hooks::partitions;

/// The invariant tensor
/// `t_σ = 2^{-d} Σ (-1)^{Σ|i_s| + ε(σ; i)} y_{i_{2d-1},i_{2d}} ⋯ y_{i_1,i_2} ⊗ x_{i_σ(1),i_σ(2)} ⋯ x_{i_σ(2d-1),i_σ(2d)}`
/// with `ε(σ; i) = Σ_{r<s, σ(r)>σ(s)} |i_σ(r)||i_σ(s)|`, returned with each
/// `x` read as the matching `∂`.
pub fn t_sigma(model: &Arc<WModel>, sigma: &SuperPerm) -> Result<WeylElement> {
    let n = sigma.len();
    if !n.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!("t_σ needs an even permutation size, got {n}")));
    }
    let d = n / 2;
    let dims = model.dims();
    let s = dims.size();
    let sg = sigma.images();
    let inversions: Vec<(usize, usize)> = (0..n)
        .flat_map(|r| (r + 1..n).map(move |t| (r, t)))
        .filter(|&(r, t)| sg[r] > sg[t])
        .map(|(r, t)| (sg[r], sg[t]))
        .collect();
    let weight = rat(1, 1 << d);
    let mut terms: BTreeMap<(WMono, WMono), _> = BTreeMap::new();
    if s == 0 {
        return Ok(WeylElement::zero(model));
    }
    let mut idx = vec![0usize; n];
    'outer: loop {
        let par = |k: usize| dims.parity(idx[k]) as usize;
        let mut flips: usize = (0..n).map(par).sum();
        flips += inversions.iter().map(|&(a, b)| par(a) * par(b)).sum::<usize>();
        let mut ok = true;
        let mut y = model.zero_mono();
        for t in (0..d).rev() {
            let Some((g, neg)) = model.index(idx[2 * t], idx[2 * t + 1]) else {
                ok = false;
                break;
            };
            let Some((n2, next)) = model.mono_mul(&y, &model.unit(g)) else {
                ok = false;
                break;
            };
            flips += usize::from(neg) + usize::from(n2);
            y = next;
        }
        let mut x = model.zero_mono();
        if ok {
            for t in 0..d {
                let Some((g, neg)) = model.index(idx[sg[2 * t]], idx[sg[2 * t + 1]]) else {
                    ok = false;
                    break;
                };
                let Some((n2, next)) = model.mono_mul(&x, &model.unit(g)) else {
                    ok = false;
                    break;
                };
                flips += usize::from(neg) + usize::from(n2);
                x = next;
            }
        }
        if ok {
            add_into(&mut terms, (y, x), sign(flips % 2 == 1) * &weight);
        }
        let mut k = 0;
        loop {
            if k == n {
                break 'outer;
            }
            idx[k] += 1;
            if idx[k] < s {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
    WeylElement::from_terms(model, terms)
}

/// `t_σ` for the block permutations `τ_{d_0,d_1} ⋯ τ_{d_{r-1},d_r}`, one per
/// partition of `d` (block lengths in decreasing order). Every `t_σ` of
/// order `d` is a combination of these.
pub fn block_invariants(model: &Arc<WModel>, d: usize) -> Result<Vec<(Vec<u32>, WeylElement)>> {
    partitions(d as u32)
        .into_iter()
        .map(|p| {
            let lengths: Vec<usize> = p.iter().map(|&v| v as usize).collect();
            let t = t_sigma(model, &SuperPerm::block_cycles(&lengths))?;
            Ok((p, t))
        })
        .collect()
}

/// Row-reduced span of `{t_σ : σ ∈ S_{2d}}` together with the dimension of
/// the space of invariants of bidegree `(d, d)`, computed independently.
#[derive(Clone, Debug)]
pub struct InvariantSpace {
    pub d: usize,
    pub basis: Vec<WeylElement>,
    pub kernel_dim: usize,
    pub all_invariant: bool,
}

impl InvariantSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The span of the `t_σ` is exactly the invariant space.
    pub fn verified(&self) -> bool {
        self.all_invariant && self.kernel_dim == self.basis.len()
    }
}

fn to_sparse(a: &WeylElement) -> SparseVec<(WMono, WMono)> {
    a.terms().map(|(k, c)| (k.clone(), c.clone())).collect()
}

fn commutes_with_simple(rho: &RhoCheck, a: &WeylElement) -> bool {
    let dims = rho.model().dims();
    dims.simple_positive()
        .into_iter()
        .chain(dims.simple_negative())
        .all(|g| rho.generator(g).supercommutator(a).is_zero())
}

/// Dimension of the `gl(m|n)`-invariants among operators `Σ c y^Y ∂^D` with
/// `|Y| = |D| = d`. Invariants have weight zero and are killed by the
/// simple root vectors, which generate the algebra together with the
/// Cartan subalgebra.
pub fn invariant_kernel_dim(model: &Arc<WModel>, d: usize) -> usize {
    let basis = GradedPieceBasis::new(model, d);
    let mut by_weight: BTreeMap<Vec<i64>, Vec<WMono>> = BTreeMap::new();
    for e in basis.monomials() {
        by_weight.entry(mono_weight(model, e)).or_default().push(e.clone());
    }
    let mut cols: Vec<WeylElement> = Vec::new();
    for monos in by_weight.values() {
        for y in monos {
            for dd in monos {
                cols.push(
                    WeylElement::from_terms(model, [((y.clone(), dd.clone()), rat(1, 1))])
                        .expect("valid exponents"),
                );
            }
        }
    }
    let rho = RhoCheck::new(model);
    let dims = model.dims();
    let gens: Vec<_> = dims.simple_positive().into_iter().chain(dims.simple_negative()).collect();
    let mut row_index: BTreeMap<(usize, WMono, WMono), usize> = BTreeMap::new();
    let mut entries = Vec::new();
    for (j, c) in cols.iter().enumerate() {
        for (gi, &g) in gens.iter().enumerate() {
            for ((y, dd), v) in rho.generator(g).supercommutator(c).terms() {
                let n = row_index.len();
                let r = *row_index.entry((gi, y.clone(), dd.clone())).or_insert(n);
                entries.push((r, j, v.clone()));
            }
        }
    }
    let mut mat = RationalMatrix::zeros(row_index.len(), cols.len());
    for (r, j, v) in entries {
        mat.set(r, j, v);
    }
    cols.len() - mat.rank()
}

/// Span of all `t_σ`, `σ ∈ S_{2d}`, verified against the invariant kernel.
pub fn invariant_symbol_space(model: &Arc<WModel>, d: usize) -> Result<InvariantSpace> {
    if d == 0 {
        return Err(Error::InvalidInput("invariant symbols start at d = 1".into()));
    }
    let mut ech = SparseEchelon::new();
    for sigma in SuperPerm::all(2 * d) {
        ech.insert(&to_sparse(&t_sigma(model, &sigma)?));
    }
    let basis: Vec<WeylElement> = ech
        .basis()
        .map(|v| WeylElement::from_terms(model, v.iter().map(|(k, c)| (k.clone(), c.clone()))))
        .collect::<Result<_>>()?;
    let rho = RhoCheck::new(model);
    let all_invariant = basis.iter().all(|b| commutes_with_simple(&rho, b));
    let kernel_dim = invariant_kernel_dim(model, d);
    let space = InvariantSpace { d, basis, kernel_dim, all_invariant };
    if !space.verified() {
        return Err(Error::NotInvariant(format!(
            "span of t_σ has dimension {} but the invariant space has dimension {kernel_dim}",
            space.dim()
        )));
    }
    Ok(space)
}
