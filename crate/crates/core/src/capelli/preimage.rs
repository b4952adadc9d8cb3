use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::Zero;

use super::normalize::sigma_normalize;
use crate::error::{Error, Result};
use crate::exactmath::{lin_solve, rat, Rational, RationalMatrix};
use crate::hooks::partitions;
use crate::superlie::{gelfand_element, SuperDims, UEAElement};
use crate::weyl::{t_sigma, RhoCheck, SuperPerm, WModel, WeylElement};

/// `(-1/2)^l str(𝐄^l)`.
fn scaled_gelfand(dims: SuperDims, l: usize) -> Result<UEAElement> {
    Ok(gelfand_element(dims, l)?.scale(&rat(-1, 2).pow(l as i32)))
}

/// Central element whose `ρ̌`-image has top symbol `t_{block_cycles(lengths)}`.
pub fn block_preimage(dims: SuperDims, lengths: &[usize]) -> Result<UEAElement> {
    let mut z = UEAElement::one(dims);
    for &l in lengths {
        z = z.mul(&scaled_gelfand(dims, l)?)?;
    }
    Ok(z)
}

/// `z_0 ⋯ z_{r-1}` with `z_s = (-1/2)^{d_{s+1}-d_s} str(𝐄^{d_{s+1}-d_s})`
/// for the cycle decomposition of `σ`.
pub fn symbol_preimage(dims: SuperDims, sigma: &SuperPerm) -> Result<UEAElement> {
    block_preimage(dims, &sigma_normalize(sigma)?.lengths())
}

struct Block {
    t: WeylElement,
    z: UEAElement,
    image: WeylElement,
}

/// Inverts `ρ̌` on invariant operators, one order at a time.
pub struct PreimageSolver {
    rho: RhoCheck,
    blocks: HashMap<usize, Vec<Block>>,
}

impl PreimageSolver {
    pub fn new(model: &Arc<WModel>) -> Self {
        PreimageSolver { rho: RhoCheck::new(model), blocks: HashMap::new() }
    }

    pub fn model(&self) -> &Arc<WModel> {
        self.rho.model()
    }

    pub fn rho_mut(&mut self) -> &mut RhoCheck {
        &mut self.rho
    }

    fn blocks(&mut self, d: usize) -> Result<&[Block]> {
        if !self.blocks.contains_key(&d) {
            let dims = self.model().dims();
            let mut out = Vec::new();
            for p in partitions(d as u32) {
                let lengths: Vec<usize> = p.iter().map(|&v| v as usize).collect();
                let t = t_sigma(self.model(), &SuperPerm::block_cycles(&lengths))?;
                let z = block_preimage(dims, &lengths)?;
                let image = self.rho.image(&z);
                out.push(Block { t, z, image });
            }
            self.blocks.insert(d, out);
        }
        Ok(&self.blocks[&d])
    }

    pub fn is_invariant(&self, op: &WeylElement) -> bool {
        self.model()
            .dims()
            .generators()
            .into_iter()
            .all(|g| self.rho.generator(g).supercommutator(op).is_zero())
    }

    /// A central `z` of filtration degree `ord(op)` with `ρ̌(z) = op`.
    pub fn full_preimage(&mut self, op: &WeylElement) -> Result<UEAElement> {
        if !self.is_invariant(op) {
            return Err(Error::NotInvariant("operator does not commute with ρ̌(gl(m|n))".into()));
        }
        let dims = self.model().dims();
        let mut rest = op.clone();
        let mut z = UEAElement::zero(dims);
        for k in (1..=op.order()).rev() {
            let s = rest.symbol(k)?;
            if s.is_zero() {
                continue;
            }
            let blocks = self.blocks(k)?;
            let coeffs = decompose(&s, blocks)?;
            for (c, b) in coeffs.iter().zip(blocks) {
                if c.is_zero() {
                    continue;
                }
                z = z.add(&b.z.scale(c))?;
                rest = rest.sub(&b.image.scale(c));
            }
            if rest.order() >= k && !rest.symbol(k)?.is_zero() {
                return Err(Error::NotInvariant(format!("order {k} symbol survives subtraction")));
            }
        }
        let model = self.model().clone();
        let c = rest.coeff(&model.zero_mono(), &model.zero_mono());
        if rest != WeylElement::scalar(&model, c.clone()) {
            return Err(Error::NotInvariant("remainder of order zero is not a scalar".into()));
        }
        z.add(&UEAElement::scalar(dims, c))
    }
}

/// Coordinates of `s` in the `t`'s of `blocks`.
fn decompose(s: &WeylElement, blocks: &[Block]) -> Result<Vec<Rational>> {
    let mut rows = BTreeMap::new();
    for (k, _) in s.terms().chain(blocks.iter().flat_map(|b| b.t.terms())) {
        let n = rows.len();
        rows.entry(k.clone()).or_insert(n);
    }
    let mut mat = RationalMatrix::zeros(rows.len(), blocks.len());
    let mut rhs = vec![Rational::zero(); rows.len()];
    for (j, b) in blocks.iter().enumerate() {
        for (k, c) in b.t.terms() {
            mat.set(rows[k], j, c.clone());
        }
    }
    for (k, c) in s.terms() {
        rhs[rows[k]] = c.clone();
    }
    lin_solve(&mat, &rhs)
        .map(|sol| sol.particular)
        .map_err(|_| Error::NotInvariant("symbol outside the span of the t_σ".into()))
}
