use num_traits::Zero;
use serde_json::json;

use super::eigen::CapelliSolver;
use super::{factorial, InterpolationBasis};
use crate::error::{Error, Result};
use crate::exactmath::{rat, rint, Context, MultiPoly, Rational};
use crate::hooks::{
    enumerate_hooks, frobenius_affine_map, frobenius_context, frobenius_point, frobenius_transform, partitions,
    weight_context, Frame, HookParams, HookPartition, Theta,
};

fn alternating(d: u32) -> Rational {
    if d % 2 == 1 {
        rint(1)
    } else {
        rint(-1)
    }
}

/// Generator of degree `d` of `Λ^♮_{m,n,θ}`:
/// `Σ (2x_k + n)^d + (-1)^{d-1} Σ ((y_l - n + 1/2)^d + (y_l - n - 1/2)^d)` for
/// `θ = 1/2` and `Σ x_k^d + (-1)^{d-1} Σ y_l^d` for `θ = 1`.
pub fn deformed_power_sum(params: HookParams, d: u32) -> MultiPoly {
    let HookParams { m, n, theta } = params;
    let ctx = frobenius_context(m, n);
    let var = |i: usize| MultiPoly::var(&ctx, i);
    let shifted = |i: usize, a: Rational, c: Rational| &var(i).scale(&a) + &MultiPoly::constant(&ctx, c);
    let sign = alternating(d);
    let mut out = MultiPoly::zero(&ctx);
    for k in 0..m {
        let base = match theta {
            Theta::Half => shifted(k, rint(2), rint(n as i64)),
            Theta::One => var(k),
        };
        out = &out + &base.pow(d);
    }
    for l in 0..n {
        let y = m + l;
        let part = match theta {
            Theta::Half => {
                let c = -rint(n as i64);
                &shifted(y, rint(1), &c + rat(1, 2)).pow(d) + &shifted(y, rint(1), &c - rat(1, 2)).pow(d)
            }
            Theta::One => var(y).pow(d),
        };
        out = &out + &part.scale(&sign);
    }
    out
}

/// Products of deformed power sums of total degree at most `d`, reduced to
/// a basis. The dimension must equal the number of hook partitions of size
/// at most `d`.
pub fn lambda_natural_basis(params: HookParams, d: usize) -> Result<InterpolationBasis> {
    let ctx = frobenius_context(params.m, params.n);
    let gens: Vec<MultiPoly> = (1..=d as u32).map(|k| deformed_power_sum(params, k)).collect();
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
    let expected = enumerate_hooks(params, d as u32, true).len();
    if basis.len() != expected {
        return Err(Error::Dimension(format!(
            "deformed power sums up to degree {d} span {} dimensions, expected {expected}",
            basis.len()
        )));
    }
    Ok(basis)
}

fn swap_images(ctx: &Context, i: usize, j: usize) -> Vec<MultiPoly> {
    (0..ctx.len())
        .map(|v| {
            let w = if v == i {
                j
            } else if v == j {
                i
            } else {
                v
            };
            MultiPoly::var(ctx, w)
        })
        .collect()
}

/// Membership in `Λ^♮_{m,n,θ}`: separate symmetry in `x` and in `y`, and
/// `f(x + e_k/2, y - e_l/2) = f(x - e_k/2, y + e_l/2)` on `x_k + θ y_l = 0`.
pub fn lambda_natural_check(params: HookParams, f: &MultiPoly) -> Result<bool> {
    let HookParams { m, n, theta } = params;
    let ctx = frobenius_context(m, n);
    if f.context() != &ctx {
        return Err(Error::ContextMismatch("expected Frobenius coordinates".into()));
    }
    for i in 1..m {
        if &f.substitute(&ctx, &swap_images(&ctx, i - 1, i))? != f {
            return Ok(false);
        }
    }
    for l in 1..n {
        if &f.substitute(&ctx, &swap_images(&ctx, m + l - 1, m + l))? != f {
            return Ok(false);
        }
    }
    let th = match theta {
        Theta::Half => rat(1, 2),
        Theta::One => rint(1),
    };
    let half = rat(1, 2);
    for k in 0..m {
        for l in 0..n {
            let y = m + l;
            let side = |s: &Rational| -> Result<MultiPoly> {
                let mut images: Vec<MultiPoly> = (0..ctx.len()).map(|v| MultiPoly::var(&ctx, v)).collect();
                images[k] = &MultiPoly::var(&ctx, y).scale(&-th.clone()) + &MultiPoly::constant(&ctx, s.clone());
                images[y] = &MultiPoly::var(&ctx, y) + &MultiPoly::constant(&ctx, -s.clone());
                f.substitute(&ctx, &images)
            };
            if side(&half)? != side(&-half.clone())? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn normalization(b: &HookPartition) -> Rational {
    match b.params().theta {
        Theta::Half => b.hook_product_h(),
        Theta::One => rint(b.classical_hook_product() as i64),
    }
}

/// `SP*_b`: the element of `Λ^♮` of degree at most `|b|` vanishing at the
/// Frobenius points of the other partitions of size at most `|b|` and
/// taking the value `H(b)` (`θ = 1/2`) or the classical hook product
/// (`θ = 1`) at `F(b)`.
pub fn sp_star(b: &HookPartition) -> Result<MultiPoly> {
    let params = b.params();
    let d = b.size() as usize;
    let basis = lambda_natural_basis(params, d)?;
    let hooks = enumerate_hooks(params, d as u32, true);
    let points: Vec<Vec<Rational>> = hooks.iter().map(|h| frobenius_point(h).coords()).collect();
    let values: Vec<Rational> = hooks
        .iter()
        .map(|h| if h == b { normalization(b) } else { Rational::zero() })
        .collect();
    let p = basis.interpolate(&points, &values)?;
    if !lambda_natural_check(params, &p)? {
        return Err(Error::NotInvariant(format!("SP*{b} fails the Λ^♮ conditions")));
    }
    Ok(p)
}

#[derive(Clone, Debug)]
pub struct SvReport {
    pub partition: HookPartition,
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
}

impl SvReport {
    pub fn pass(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "partition": self.partition.to_string(),
            "pass": self.pass(),
            "frobenius_c_star": self.lhs.to_json(),
            "scaled_sp_star": self.rhs.to_json(),
        })
    }
}

/// `𝓕(c*_λ)` against `(d!/H(b)) SP*_b` for `λ = Γ*(b)`.
pub fn verify_sv(solver: &mut CapelliSolver, b: &HookPartition) -> Result<SvReport> {
    let c = solver.c_star_poly(b)?;
    let lhs = frobenius_transform(b.params(), &c.poly)?;
    let rhs = sp_star(b)?.scale(&(factorial(b.size() as usize) / b.hook_product_h()));
    Ok(SvReport { partition: b.clone(), lhs, rhs })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaOneFamily {
    pub s_star: MultiPoly,
    pub s_top: MultiPoly,
}

impl ThetaOneFamily {
    /// `s_top` in the weight coordinates `e_k`, through the linear part of
    /// the inverse Frobenius map.
    pub fn natural_top(&self, params: HookParams) -> Result<MultiPoly> {
        let map = frobenius_affine_map(params);
        let ctx = weight_context(Frame::HStarEps, params.m, params.n);
        let mut images = Vec::with_capacity(ctx.len());
        for (i, form) in map.images.iter().enumerate() {
            let c = &form.linear[i];
            if c.is_zero() || form.linear.iter().enumerate().any(|(j, v)| j != i && !v.is_zero()) {
                return Err(Error::InvalidInput("Frobenius map is not diagonal".into()));
            }
            images.push(MultiPoly::var(&ctx, i).scale(&c.recip()));
        }
        self.s_top.substitute(&ctx, &images)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "s_star": self.s_star.to_json(), "s_top": self.s_top.to_json() })
    }
}

pub fn theta_one_family(b: &HookPartition) -> Result<ThetaOneFamily> {
    if b.params().theta != Theta::One {
        return Err(Error::FrameMismatch("the θ = 1 family needs θ = 1 partitions".into()));
    }
    let s_star = sp_star(b)?;
    let s_top = s_star.top_part()?;
    Ok(ThetaOneFamily { s_star, s_top })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_sp_star() {
        let params = HookParams::half(1, 1);
        let ctx = frobenius_context(1, 1);
        let b = HookPartition::parse("1", params).unwrap();
        let expect = &(&MultiPoly::var(&ctx, 0) + &MultiPoly::var(&ctx, 1)) + &MultiPoly::constant(&ctx, rat(-1, 2));
        assert_eq!(sp_star(&b).unwrap(), expect);
        let e = HookPartition::parse("", params).unwrap();
        assert_eq!(sp_star(&e).unwrap(), MultiPoly::one(&ctx));
    }

    #[test]
    fn power_sums_are_shifted_supersymmetric() {
        for params in [HookParams::half(2, 1), HookParams::one(2, 2)] {
            for d in 1..=3 {
                assert!(lambda_natural_check(params, &deformed_power_sum(params, d)).unwrap());
            }
        }
    }
}
