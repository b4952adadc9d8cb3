use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;

use super::graded::{GradedPieceBasis, WPoly};
use super::highest::{cyclic_span_dim, highest_weight_vectors, mono_weight};
use super::rho::RhoCheck;
use super::tsigma::block_invariants;
use super::{WModel, WeylElement};
use crate::error::{Error, Result};
use crate::exactmath::{lin_solve, rint, Rational, RationalMatrix};
use crate::hooks::{enumerate_hooks, gamma_star_map, HookParams, HookPartition, Theta, Weight};
use crate::superlie::SuperDims;

/// Shared state for Capelli operators on `W = S^2(C^{m|2n})`: highest weight
/// vectors, block invariants and operators, computed on demand and cached.
pub struct CapelliData {
    params: HookParams,
    model: Arc<WModel>,
    rho: RhoCheck,
    hw: HashMap<Vec<u32>, WPoly>,
    invariants: HashMap<usize, Vec<(Vec<u32>, WeylElement)>>,
    operators: HashMap<Vec<u32>, WeylElement>,
}

fn factorial(d: usize) -> Rational {
    (1..=d as i64).map(rint).fold(rint(1), |a, b| a * b)
}

impl CapelliData {
    /// Ambient `gl(m|2n)`.
    pub fn new(m: usize, n: usize) -> Self {
        let model = Arc::new(WModel::new(SuperDims::new(m, 2 * n)));
        let rho = RhoCheck::new(&model);
        CapelliData {
            params: HookParams::half(m, n),
            model,
            rho,
            hw: HashMap::new(),
            invariants: HashMap::new(),
            operators: HashMap::new(),
        }
    }

    pub fn params(&self) -> HookParams {
        self.params
    }

    pub fn model(&self) -> &Arc<WModel> {
        &self.model
    }

    pub fn rho(&self) -> &RhoCheck {
        &self.rho
    }

    pub fn rho_mut(&mut self) -> &mut RhoCheck {
        &mut self.rho
    }

    fn check(&self, b: &HookPartition) -> Result<()> {
        if b.params() != self.params {
            return Err(Error::InvalidInput(format!(
                "partition {b} belongs to {:?}, expected {:?}",
                b.params(),
                self.params
            )));
        }
        Ok(())
    }

    pub fn hooks(&self, d: usize) -> Vec<HookPartition> {
        enumerate_hooks(self.params, d as u32, false)
    }

    pub fn weight(&self, b: &HookPartition) -> Result<Weight> {
        gamma_star_map(b)
    }

    /// The highest weight vector of `V_{Γ*(b)} ⊂ 𝒫^{|b|}(W)`.
    pub fn hw_vector(&mut self, b: &HookPartition) -> Result<WPoly> {
        self.check(b)?;
        if let Some(v) = self.hw.get(b.parts()) {
            return Ok(v.clone());
        }
        let mu = gamma_star_map(b)?.to_cartan()?;
        let mut vs = highest_weight_vectors(&self.rho, b.size() as usize, &mu);
        if vs.len() != 1 {
            return Err(Error::Dimension(format!(
                "{} highest weight vectors of weight Γ*{b}, expected 1",
                vs.len()
            )));
        }
        let v = vs.pop().expect("one vector");
        self.hw.insert(b.parts().to_vec(), v.clone());
        Ok(v)
    }

    /// `t` for the block permutations of each partition of `d`.
    pub fn invariants(&mut self, d: usize) -> Result<Vec<(Vec<u32>, WeylElement)>> {
        if let Some(v) = self.invariants.get(&d) {
            return Ok(v.clone());
        }
        let v = block_invariants(&self.model, d)?;
        self.invariants.insert(d, v.clone());
        Ok(v)
    }

    /// Scalar by which `op` acts on the highest weight vector of `V_{Γ*(b)}`.
    pub fn eigenvalue(&mut self, op: &WeylElement, b: &HookPartition) -> Result<Rational> {
        let v = self.hw_vector(b)?;
        op.apply_poly(&v)
            .ratio_to(&v)
            .ok_or_else(|| Error::NotInvariant(format!("operator does not preserve the line of v_{b}")))
    }

    /// Highest weight vectors and cyclic spans in `𝒫^k(W)`.
    pub fn decomposition(&self, k: usize) -> Decomposition {
        let basis = GradedPieceBasis::new(&self.model, k);
        let mut weights: Vec<Vec<i64>> = basis.monomials().iter().map(|e| mono_weight(&self.model, e)).collect();
        weights.sort();
        weights.dedup();
        let mut hw_total = 0;
        let mut span_total = 0;
        for w in weights {
            let mu: Vec<Rational> = w.iter().map(|&x| rint(x)).collect();
            for v in highest_weight_vectors(&self.rho, k, &mu) {
                hw_total += 1;
                span_total += cyclic_span_dim(&self.rho, &v);
            }
        }
        let mut expected_weights = true;
        for b in self.hooks(k) {
            let found = gamma_star_map(&b)
                .and_then(|w| w.to_cartan())
                .map(|mu| highest_weight_vectors(&self.rho, k, &mu).len());
            expected_weights &= found == Ok(1);
        }
        Decomposition {
            degree: k,
            piece_dim: basis.len(),
            hooks: self.hooks(k).len(),
            hw_total,
            span_total,
            expected_weights,
        }
    }

    /// `D_λ` for `λ = Γ*(b)`: the invariant operator of order `|b|` acting by
    /// `|b|!` on `V_λ` and by zero on the other summands of degree `|b|`.
    pub fn capelli_operator(&mut self, b: &HookPartition) -> Result<WeylElement> {
        self.check(b)?;
        if let Some(op) = self.operators.get(b.parts()) {
            return Ok(op.clone());
        }
        let d = b.size() as usize;
        let basis = self.invariants(d)?;
        let hooks = self.hooks(d);
        let mut mat = RationalMatrix::zeros(hooks.len(), basis.len());
        let mut rhs = vec![Rational::zero(); hooks.len()];
        for (r, mu) in hooks.iter().enumerate() {
            for (c, (_, t)) in basis.iter().enumerate() {
                mat.set(r, c, self.eigenvalue(t, mu)?);
            }
            if mu == b {
                rhs[r] = factorial(d);
            }
        }
        let sol = lin_solve(&mat, &rhs).map_err(|_| Error::Singular(format!("no invariant operator isolates {b}")))?;
        let mut op = WeylElement::zero(&self.model);
        for (c, (_, t)) in sol.particular.iter().zip(&basis) {
            if !c.is_zero() {
                op = op.add(&t.scale(c));
            }
        }
        self.operators.insert(b.parts().to_vec(), op.clone());
        Ok(op)
    }
}

/// Bookkeeping for `𝒫^k(W) = ⊕ V_μ` over `μ ∈ E*_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub degree: usize,
    pub piece_dim: usize,
    pub hooks: usize,
    /// Highest weight vectors over all weights occurring in degree `k`.
    pub hw_total: usize,
    pub span_total: usize,
    /// Each `Γ*(b)`, `|b| = k`, carries exactly one highest weight vector.
    pub expected_weights: bool,
}

impl Decomposition {
    pub fn holds(&self) -> bool {
        self.expected_weights && self.hw_total == self.hooks && self.span_total == self.piece_dim
    }
}

/// `D_λ` at `gl(m|2n)` for `λ = Γ*(b)`.
pub fn capelli_operator(b: &HookPartition) -> Result<WeylElement> {
    let p = b.params();
    if p.theta != Theta::Half {
        return Err(Error::FrameMismatch("Capelli operators live on the θ = 1/2 family".into()));
    }
    CapelliData::new(p.m, p.n).capelli_operator(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn rank_one() {
        let b = HookPartition::parse("1", HookParams::half(1, 0)).unwrap();
        assert_eq!(capelli_operator(&b).unwrap().to_string(), "1/2*y(1,1)d(1,1)");
    }

    #[test]
    fn eigenvalues_at_one_one() {
        let mut data = CapelliData::new(1, 1);
        for d in 1..=2 {
            for b in data.hooks(d) {
                let op = data.capelli_operator(&b).unwrap();
                for mu in data.hooks(d) {
                    let ev = data.eigenvalue(&op, &mu).unwrap();
                    let expect = if mu == b { factorial(d) } else { rat(0, 1) };
                    assert_eq!(ev, expect, "{b} on {mu}");
                }
            }
        }
    }
}
