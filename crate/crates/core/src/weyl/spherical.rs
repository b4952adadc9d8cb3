use std::sync::Arc;

use num_traits::{One, Zero};

use super::capelli_op::CapelliData;
use super::graded::WPoly;
use super::rho::{rho_action, x_var};
use super::WModel;
use crate::error::{Error, Result};
use crate::exactmath::{rat, rint, MultiPoly, Rational};
use crate::hooks::{weight_context, Frame, HookPartition};
use crate::superlie::{SuperDims, UEAElement};

/// `β(e_i, e_j)` for the form with matrix `diag(I_m, J, .., J)`,
/// `J = [[0, 1], [-1, 0]]`.
fn beta(dims: SuperDims, i: usize, j: usize) -> Rational {
    let m = dims.m;
    match (i < m, j < m) {
        (true, true) if i == j => rint(1),
        (false, false) => {
            let (a, b) = (i - m, j - m);
            if a % 2 == 0 && b == a + 1 {
                rint(1)
            } else if b % 2 == 0 && a == b + 1 {
                rint(-1)
            } else {
                Rational::zero()
            }
        }
        _ => Rational::zero(),
    }
}

/// `h_β` on an `x`-monomial: the algebra map `x_{i,j} ↦ β(e_i, e_j)`.
fn h_beta(model: &WModel, e: &[u8]) -> Rational {
    let mut v = Rational::one();
    for (g, &k) in e.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if model.is_odd(g) {
            return Rational::zero();
        }
        let (i, j) = model.gen(g);
        let b = beta(model.dims(), i, j);
        if b.is_zero() {
            return b;
        }
        for _ in 0..k {
            v *= &b;
        }
    }
    v
}

/// Spanning set of the orthosymplectic subalgebra `𝔨 ⊂ gl(m|2n)` fixing `β`.
pub fn k_spanning_set(m: usize, n: usize) -> Vec<UEAElement> {
    let dims = SuperDims::new(m, 2 * n);
    let bar = |l: usize| (m + l - 1) as u8;
    let ev = |k: usize| (k - 1) as u8;
    let two = |a: (u8, u8), ca: i64, b: (u8, u8), cb: i64| {
        UEAElement::from_terms(dims, [(vec![a], rint(ca)), (vec![b], rint(cb))]).expect("indices in range")
    };
    let mut out = Vec::new();
    for k in 1..=m {
        for l in 1..=m {
            if k != l {
                out.push(two((ev(k), ev(l)), 1, (ev(l), ev(k)), -1));
            }
        }
    }
    for k in 1..=n {
        for l in 1..=n {
            out.push(two((bar(2 * l - 1), bar(2 * k - 1)), 1, (bar(2 * k), bar(2 * l)), -1));
            out.push(two((bar(2 * l - 1), bar(2 * k)), 1, (bar(2 * k - 1), bar(2 * l)), 1));
            out.push(two((bar(2 * l), bar(2 * k - 1)), 1, (bar(2 * k), bar(2 * l - 1)), 1));
        }
    }
    for k in 1..=m {
        for l in 1..=n {
            out.push(two((ev(k), bar(2 * l - 1)), 1, (bar(2 * l), ev(k)), 1));
            out.push(two((ev(k), bar(2 * l)), 1, (bar(2 * l - 1), ev(k)), -1));
        }
    }
    out.retain(|x| !x.is_zero());
    out
}

/// `β* = -1/4 Σ_k x_{k,k} + 1/2 Σ_l x_{2l-1,2l}` (odd indices in the second sum).
pub fn beta_star(model: &Arc<WModel>) -> WPoly {
    let dims = model.dims();
    let mut p = WPoly::zero(model);
    for k in 0..dims.m {
        p = p.add(&x_var(model, k, k).scale(&rat(-1, 4)));
    }
    for l in 0..dims.n / 2 {
        let a = dims.m + 2 * l;
        p = p.add(&x_var(model, a, a + 1).scale(&rat(1, 2)));
    }
    p
}

/// `𝐝_λ`: replace every `∂`-monomial of `D_λ` by the value of `h_β` on the
/// matching `x`-monomial.
pub fn spherical_vector(data: &mut CapelliData, b: &HookPartition) -> Result<WPoly> {
    let op = data.capelli_operator(b)?;
    let model = data.model().clone();
    let mut out = WPoly::zero(&model);
    for ((y, d), c) in op.terms() {
        let v = h_beta(&model, d);
        if !v.is_zero() {
            out.add_term(y.clone(), c * v);
        }
    }
    if out.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(out)
}

/// For every generator `y_g`, the linear form `ξ ↦ <y_g, ρ(j(ξ)) β*>` on
/// `𝔞*`, where `j(ξ) = Σ_k a_k h_k - 1/2 Σ_l a_l h_l` is the trace-form
/// identification (`κ(h_k, h_k) = 1`, `κ(h_l, h_l) = -2`).
pub fn iota_a_images(model: &Arc<WModel>) -> Result<Vec<MultiPoly>> {
    let dims = model.dims();
    if !dims.n.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!("{dims}: odd dimension must be even")));
    }
    let (m, n) = (dims.m, dims.n / 2);
    let ctx = weight_context(Frame::AStarGamma, m, n);
    let bs = beta_star(model);
    // ρ(j(γ-dual basis vector)) β* for each coordinate a_v
    let mut columns: Vec<WPoly> = Vec::new();
    for k in 0..m {
        columns.push(rho_action(model, (k, k), &bs));
    }
    for l in 0..n {
        let a = m + 2 * l;
        let h = rho_action(model, (a, a), &bs).add(&rho_action(model, (a + 1, a + 1), &bs));
        columns.push(h.scale(&rat(-1, 2)));
    }
    let mut images = Vec::with_capacity(model.num_gens());
    for g in 0..model.num_gens() {
        let unit = model.unit(g);
        let pair = model.pairing(g);
        let mut p = MultiPoly::zero(&ctx);
        for (v, col) in columns.iter().enumerate() {
            if let Some(c) = col.terms().get(&unit) {
                p = &p + &MultiPoly::var(&ctx, v).scale(&(c * &pair));
            }
        }
        images.push(p);
    }
    Ok(images)
}

/// `d_λ = j* ∘ ι*_𝔞 (𝐝_λ)`, a homogeneous polynomial on `𝔞*`.
pub fn spherical_poly(data: &mut CapelliData, b: &HookPartition) -> Result<MultiPoly> {
    let v = spherical_vector(data, b)?;
    let model = data.model().clone();
    let images = iota_a_images(&model)?;
    let ctx = images
        .first()
        .map(|p| p.context().clone())
        .unwrap_or_else(|| weight_context(Frame::AStarGamma, model.dims().m, model.dims().n / 2));
    let mut out = MultiPoly::zero(&ctx);
    for (e, c) in v.terms() {
        let mut term = MultiPoly::constant(&ctx, c.clone());
        for (g, &k) in e.iter().enumerate() {
            if k == 0 {
                continue;
            }
            if model.is_odd(g) {
                if !images[g].is_zero() {
                    return Err(Error::InvalidInput("odd coordinate with nonzero image".into()));
                }
                term = MultiPoly::zero(&ctx);
                break;
            }
            term = &term * &images[g].pow(k as u32);
        }
        out = &out + &term;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hooks::HookParams;

    #[test]
    fn rank_one() {
        let mut data = CapelliData::new(1, 0);
        let b = HookPartition::parse("1", HookParams::half(1, 0)).unwrap();
        assert_eq!(spherical_vector(&mut data, &b).unwrap().render("y"), "1/2*y(1,1)");
        let ctx = weight_context(Frame::AStarGamma, 1, 0);
        let expect = MultiPoly::var(&ctx, 0).scale(&rat(-1, 2));
        assert_eq!(spherical_poly(&mut data, &b).unwrap(), expect);
    }

    #[test]
    fn iota_images() {
        let model = Arc::new(WModel::new(SuperDims::new(1, 2)));
        let images = iota_a_images(&model).unwrap();
        let ctx = weight_context(Frame::AStarGamma, 1, 1);
        // y(1,1) -> -a1, y(1b,2b) -> -a1b/2, odd coordinates -> 0
        assert_eq!(images[0], MultiPoly::var(&ctx, 0).scale(&rint(-1)));
        assert_eq!(images[3], MultiPoly::var(&ctx, 1).scale(&rat(-1, 2)));
        assert!(images[1].is_zero() && images[2].is_zero());
    }

    #[test]
    fn beta_star_is_k_invariant() {
        let model = Arc::new(WModel::new(SuperDims::new(2, 2)));
        let bs = beta_star(&model);
        for x in k_spanning_set(2, 1) {
            let mut acc = WPoly::zero(&model);
            for (w, c) in x.terms() {
                let (i, j) = w[0];
                acc = acc.add(&rho_action(&model, (i as usize, j as usize), &bs).scale(c));
            }
            assert!(acc.is_zero(), "{x}");
        }
    }
}
