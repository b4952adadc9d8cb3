use std::collections::HashMap;

use num_traits::Zero;
use serde_json::json;

use super::preimage::PreimageSolver;
use super::{factorial, EigenPoly, InterpolationBasis};
use crate::error::{Error, Result};
use crate::exactmath::{rint, MultiPoly, Rational};
use crate::hooks::{enumerate_hooks, gamma_star_map, partitions, weight_context, Frame, HookParams, HookPartition};
use crate::superlie::{gd_element, q_projection, SuperDims, UEAElement};
use crate::weyl::{spherical_poly, CapelliData, WeylElement};

fn to_weight_vars(p: &MultiPoly, m: usize, n: usize) -> Result<MultiPoly> {
    p.rename(&weight_context(Frame::AStarGamma, m, n))
}

/// Products `q(G_{k_1}) ⋯ q(G_{k_r})` with `Σ k_i <= d`, reduced to a basis
/// of polynomials on `𝔞*` for `gl(m|2n)`. The dimension must equal the
/// number of hook partitions of size at most `d`.
pub fn ia_star_basis(m: usize, n: usize, d: usize) -> Result<InterpolationBasis> {
    let dims = SuperDims::new(m, 2 * n);
    let ctx = weight_context(Frame::AStarGamma, m, n);
    let gens = (1..=d as u32)
        .map(|k| to_weight_vars(&q_projection(&gd_element(dims, k)?, dims)?, m, n))
        .collect::<Result<Vec<_>>>()?;
    let mut products = Vec::new();
    for size in 0..=d as u32 {
        for p in partitions(size) {
            let mut f = MultiPoly::one(&ctx);
            for &k in &p {
                f = &f * &gens[k as usize - 1];
            }
            products.push((p, f));
        }
    }
    let basis = InterpolationBasis::from_products(&ctx, products);
    let expected = enumerate_hooks(HookParams::half(m, n), d as u32, true).len();
    if basis.len() != expected {
        return Err(Error::Dimension(format!(
            "products of q(G_k) up to degree {d} span {} dimensions, expected {expected}",
            basis.len()
        )));
    }
    Ok(basis)
}

/// Eigenvalue polynomials of the Capelli operators on `S^2(C^{m|2n})`.
pub struct CapelliSolver {
    data: CapelliData,
    pre: PreimageSolver,
    z: HashMap<Vec<u32>, UEAElement>,
}

#[derive(Clone, Debug)]
pub struct MainReport {
    pub partition: HookPartition,
    pub top: MultiPoly,
    pub spherical: MultiPoly,
}

impl MainReport {
    pub fn pass(&self) -> bool {
        self.top == self.spherical
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "partition": self.partition.to_string(),
            "pass": self.pass(),
            "top": self.top.to_json(),
            "spherical": self.spherical.to_json(),
        })
    }
}

impl CapelliSolver {
    pub fn new(m: usize, n: usize) -> Self {
        let data = CapelliData::new(m, n);
        let pre = PreimageSolver::new(data.model());
        CapelliSolver { data, pre, z: HashMap::new() }
    }

    pub fn params(&self) -> HookParams {
        self.data.params()
    }

    pub fn data(&self) -> &CapelliData {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut CapelliData {
        &mut self.data
    }

    pub fn preimages(&mut self) -> &mut PreimageSolver {
        &mut self.pre
    }

    pub fn hooks(&self, d: usize) -> Vec<HookPartition> {
        self.data.hooks(d)
    }

    pub fn capelli_operator(&mut self, b: &HookPartition) -> Result<WeylElement> {
        self.data.capelli_operator(b)
    }

    /// `z_λ`, a central preimage of `D_λ`.
    pub fn z_lambda(&mut self, b: &HookPartition) -> Result<UEAElement> {
        if let Some(z) = self.z.get(b.parts()) {
            return Ok(z.clone());
        }
        let op = self.data.capelli_operator(b)?;
        let z = self.pre.full_preimage(&op)?;
        self.z.insert(b.parts().to_vec(), z.clone());
        Ok(z)
    }

    /// `ρ̌(z_λ)` recomputed from scratch.
    pub fn preimage_image(&mut self, b: &HookPartition) -> Result<WeylElement> {
        let z = self.z_lambda(b)?;
        Ok(self.pre.rho_mut().image(&z))
    }

    fn eigen(&self, b: &HookPartition, poly: MultiPoly) -> Result<EigenPoly> {
        Ok(EigenPoly { lambda: gamma_star_map(b)?, d: b.size() as usize, poly })
    }

    /// `c_λ(μ) = μ(q(HC⁺(z_λ)))`.
    pub fn c_poly_hc(&mut self, b: &HookPartition) -> Result<EigenPoly> {
        let z = self.z_lambda(b)?;
        let dims = z.dims();
        let HookParams { m, n, .. } = self.params();
        let poly = to_weight_vars(&q_projection(&z.hc_plus(), dims)?, m, n)?;
        self.eigen(b, poly)
    }

    /// `c*_λ(ν) = (-ν)(q(HC⁻(z_λ)))`.
    pub fn c_star_poly(&mut self, b: &HookPartition) -> Result<EigenPoly> {
        let z = self.z_lambda(b)?;
        let dims = z.dims();
        let HookParams { m, n, .. } = self.params();
        let p = to_weight_vars(&q_projection(&z.hc_minus(), dims)?, m, n)?;
        let ctx = p.context().clone();
        let neg: Vec<MultiPoly> = (0..ctx.len()).map(|i| MultiPoly::var(&ctx, i).scale(&rint(-1))).collect();
        let poly = p.substitute(&ctx, &neg)?;
        self.eigen(b, poly)
    }

    /// The unique element of `𝐈(𝔞*)` of degree `<= d` with value `d!` at `λ`
    /// and zero at every other `Γ*(b')`, `|b'| <= d`.
    pub fn c_poly_interp(&mut self, b: &HookPartition) -> Result<EigenPoly> {
        let HookParams { m, n, .. } = self.params();
        let d = b.size() as usize;
        let basis = ia_star_basis(m, n, d)?;
        let hooks = enumerate_hooks(self.params(), d as u32, true);
        let mut points = Vec::with_capacity(hooks.len());
        let mut values = Vec::with_capacity(hooks.len());
        for h in &hooks {
            points.push(gamma_star_map(h)?.coords);
            values.push(if h == b { factorial(d) } else { Rational::zero() });
        }
        let poly = basis.interpolate(&points, &values)?;
        self.eigen(b, poly)
    }

    /// Scalar by which `D_λ` acts on the highest weight vector of `V_μ`.
    pub fn direct_eigenvalue(&mut self, b: &HookPartition, mu: &HookPartition) -> Result<Rational> {
        let op = self.data.capelli_operator(b)?;
        self.data.eigenvalue(&op, mu)
    }

    pub fn spherical_poly(&mut self, b: &HookPartition) -> Result<MultiPoly> {
        spherical_poly(&mut self.data, b)
    }

    /// Top homogeneous part of `c_λ` against `d_λ`.
    pub fn verify_main(&mut self, b: &HookPartition) -> Result<MainReport> {
        let c = self.c_poly_hc(b)?;
        Ok(MainReport { partition: b.clone(), top: c.poly.top_part()?, spherical: self.spherical_poly(b)? })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn rank_one() {
        let mut s = CapelliSolver::new(1, 0);
        let b = HookPartition::parse("1", HookParams::half(1, 0)).unwrap();
        let c = s.c_poly_hc(&b).unwrap();
        let ctx = weight_context(Frame::AStarGamma, 1, 0);
        assert_eq!(c.poly, MultiPoly::var(&ctx, 0).scale(&rat(-1, 2)));
        assert_eq!(c.eval(&c.lambda).unwrap(), rint(1));
        assert_eq!(s.c_poly_interp(&b).unwrap(), c);
    }

    #[test]
    fn small_bases() {
        assert_eq!(ia_star_basis(1, 1, 0).unwrap().len(), 1);
        assert_eq!(ia_star_basis(1, 1, 1).unwrap().len(), 2);
        assert_eq!(ia_star_basis(1, 1, 2).unwrap().len(), 4);
    }
}
