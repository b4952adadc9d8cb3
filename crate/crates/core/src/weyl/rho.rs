use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;

use super::graded::WPoly;
use super::{sign, WModel, WeylElement};
use crate::exactmath::rint;
use crate::superlie::{Gen, UEAElement, Word};

/// `ρ̌: U(gl(m|n)) -> 𝒫𝒟(W)` with
/// `ρ̌(E_{i,j}) = -(-1)^{|i||j|} Σ_r (-1)^{|r|} y_{r,j} ∂_{r,i}`.
/// Images of words are memoized by prefix.
pub struct RhoCheck {
    model: Arc<WModel>,
    gens: HashMap<Gen, WeylElement>,
    words: HashMap<Word, WeylElement>,
}

impl RhoCheck {
    pub fn new(model: &Arc<WModel>) -> Self {
        let dims = model.dims();
        let mut gens = HashMap::new();
        for (i, j) in dims.generators() {
            let (iu, ju) = (i as usize, j as usize);
            let mut acc = WeylElement::zero(model);
            for r in 0..dims.size() {
                let t = WeylElement::y(model, r, ju).mul(&WeylElement::d(model, r, iu));
                let neg = (dims.parity(iu) * dims.parity(ju) + dims.parity(r) + 1) % 2 == 1;
                acc = acc.add(&t.scale(&sign(neg)));
            }
            gens.insert((i, j), acc);
        }
        RhoCheck { model: model.clone(), gens, words: HashMap::new() }
    }

    pub fn model(&self) -> &Arc<WModel> {
        &self.model
    }

    pub fn generator(&self, g: Gen) -> &WeylElement {
        &self.gens[&g]
    }

    fn word(&mut self, w: &[Gen]) -> WeylElement {
        if w.is_empty() {
            return WeylElement::one(&self.model);
        }
        if let Some(r) = self.words.get(w) {
            return r.clone();
        }
        let head = self.word(&w[..w.len() - 1]);
        let r = head.mul(&self.gens[&w[w.len() - 1]]);
        self.words.insert(w.to_vec(), r.clone());
        r
    }

    pub fn image(&mut self, x: &UEAElement) -> WeylElement {
        assert_eq!(x.dims(), self.model.dims(), "ρ̌ ambient mismatch");
        let mut out = WeylElement::zero(&self.model);
        for (w, c) in x.terms() {
            out = out.add(&self.word(w).scale(c));
        }
        out
    }
}

pub fn rho_check(model: &Arc<WModel>, x: &UEAElement) -> WeylElement {
    RhoCheck::new(model).image(x)
}

/// `ρ(E_{i,j}) = Σ_r x_{i,r} 𝖣_{j,r}` on a polynomial in the `x`-coordinates,
/// where `𝖣_{i,j} x_{k,l} = δ_{ik}δ_{jl} + (-1)^{|i||j|} δ_{il}δ_{jk}`.
pub fn rho_action(model: &Arc<WModel>, (i, j): (usize, usize), p: &WPoly) -> WPoly {
    let dims = model.dims();
    let mut out = WPoly::zero(model);
    for r in 0..dims.size() {
        let (Some((gx, nx)), Some((gd, nd))) = (model.index(i, r), model.index(j, r)) else {
            continue;
        };
        for (e, c) in p.terms() {
            if e[gd] == 0 {
                continue;
            }
            let mut c = c * model.pairing(gd);
            let mut neg = nx ^ nd;
            if model.is_odd(gd) {
                neg ^= model.odd_before(e, gd) % 2 == 1;
            } else {
                c *= rint(e[gd] as i64);
            }
            let mut rest = e.clone();
            rest[gd] -= 1;
            let Some((n2, f)) = model.mono_mul(&model.unit(gx), &rest) else { continue };
            if !c.is_zero() {
                out.add_term(f, sign(neg ^ n2) * c);
            }
        }
    }
    out
}

/// `x_{i,j}` as a polynomial on `W^*`.
pub fn x_var(model: &Arc<WModel>, i: usize, j: usize) -> WPoly {
    match model.index(i, j) {
        Some((g, neg)) => WPoly::monomial(model, model.unit(g), sign(neg)),
        None => WPoly::zero(model),
    }
}
