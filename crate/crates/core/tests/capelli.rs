use std::sync::Arc;

use num_traits::Zero;
use proptest::prelude::*;
use supercapelli_core::capelli::*;
use supercapelli_core::exactmath::{rint, MultiPoly, Rational};
use supercapelli_core::hooks::{dual_weight, enumerate_hooks, frobenius_context, frobenius_transform, gamma_star_map, HookParams, HookPartition};
use supercapelli_core::superlie::{gelfand_element, hc_project, omega, omega_cartan, HcSign, SuperDims};
use supercapelli_core::weyl::{t_sigma, RhoCheck, SuperPerm, WModel};

fn factorial(d: usize) -> Rational {
    (1..=d as i64).map(rint).fold(rint(1), |a, b| a * b)
}

#[test]
fn symbol_preimages_recover_t_sigma() {
    let model = Arc::new(WModel::new(SuperDims::new(1, 2)));
    let mut rho = RhoCheck::new(&model);
    for d in 1..=2 {
        for sigma in SuperPerm::all(2 * d) {
            let z = symbol_preimage(model.dims(), &sigma).unwrap();
            let s = rho.image(&z).symbol(d).unwrap();
            assert_eq!(s, t_sigma(&model, &sigma).unwrap(), "{sigma}");
        }
    }
}

#[test]
fn single_cycle_preimage_is_scaled_gelfand() {
    let dims = SuperDims::new(1, 1);
    let z = symbol_preimage(dims, &SuperPerm::tau(4, 0, 2)).unwrap();
    let g = gelfand_element(dims, 2).unwrap().scale(&supercapelli_core::exactmath::rat(1, 4));
    assert_eq!(z, g);
}

#[test]
fn full_preimages_of_capelli_operators() {
    let mut s = CapelliSolver::new(1, 1);
    for d in 0..=2 {
        for b in s.hooks(d) {
            let op = s.capelli_operator(&b).unwrap();
            assert_eq!(s.preimage_image(&b).unwrap(), op, "{b}");
        }
    }
}

#[test]
fn full_preimage_of_gelfand_image() {
    let model = Arc::new(WModel::new(SuperDims::new(1, 2)));
    let mut solver = PreimageSolver::new(&model);
    let op = solver.rho_mut().image(&gelfand_element(model.dims(), 2).unwrap());
    let z = solver.full_preimage(&op).unwrap();
    assert_eq!(solver.rho_mut().image(&z), op);
}

#[test]
fn non_invariant_operators_are_rejected() {
    let model = Arc::new(WModel::new(SuperDims::new(1, 2)));
    let mut solver = PreimageSolver::new(&model);
    let op = supercapelli_core::weyl::WeylElement::y(&model, 0, 0);
    assert!(solver.full_preimage(&op).is_err());
}

fn coherence(m: usize, n: usize, dmax: usize, mu_max: usize) {
    let mut s = CapelliSolver::new(m, n);
    for d in 0..=dmax {
        for b in s.hooks(d) {
            let hc = s.c_poly_hc(&b).unwrap();
            let interp = s.c_poly_interp(&b).unwrap();
            assert_eq!(hc, interp, "{b}");
            assert!(hc.poly.degree().unwrap_or(0) as usize <= d);
            for k in 0..=mu_max {
                for mu in s.hooks(k) {
                    let direct = s.direct_eigenvalue(&b, &mu).unwrap();
                    let w = gamma_star_map(&mu).unwrap();
                    assert_eq!(hc.eval(&w).unwrap(), direct, "c_{b}({mu})");
                    if k <= d {
                        let expect = if mu == b { factorial(d) } else { Rational::zero() };
                        assert_eq!(direct, expect);
                    }
                }
            }
        }
    }
}

#[test]
fn eigenvalue_polynomials_agree_at_one_one() {
    coherence(1, 1, 2, 3);
}

#[test]
fn top_parts_are_spherical() {
    let mut s = CapelliSolver::new(1, 1);
    for d in 0..=2 {
        for b in s.hooks(d) {
            let r = s.verify_main(&b).unwrap();
            assert!(r.pass(), "{}", r.to_json());
        }
    }
}

#[test]
fn sergeev_veselov_identification() {
    let mut s = CapelliSolver::new(1, 1);
    for d in 0..=2 {
        for b in s.hooks(d) {
            let r = verify_sv(&mut s, &b).unwrap();
            assert!(r.pass(), "{}", r.to_json());
        }
    }
}

#[test]
fn duality_of_eigenvalue_polynomials() {
    let mut s = CapelliSolver::new(1, 1);
    for d in 0..=2 {
        for b in s.hooks(d) {
            let c = s.c_poly_hc(&b).unwrap();
            let cs = s.c_star_poly(&b).unwrap();
            for k in 0..=3 {
                for mu in s.hooks(k) {
                    let w = gamma_star_map(&mu).unwrap();
                    assert_eq!(c.eval(&w).unwrap(), cs.eval(&dual_weight(&w).unwrap()).unwrap(), "{b} {mu}");
                }
            }
        }
    }
}

#[test]
fn hc_minus_of_omega() {
    for (m, n) in [(1, 1), (1, 2), (2, 1)] {
        let dims = SuperDims::new(m, n);
        for d in 1..=3 {
            let z = gelfand_element(dims, d).unwrap();
            assert_eq!(hc_project(&omega(&z), HcSign::Minus), omega_cartan(&z.hc_plus()));
        }
    }
}

#[test]
fn ia_star_images_are_shifted_supersymmetric() {
    let params = HookParams::half(1, 1);
    let basis = ia_star_basis(1, 1, 3).unwrap();
    for p in &basis.polys {
        let f = frobenius_transform(params, p).unwrap();
        assert!(lambda_natural_check(params, &f).unwrap());
    }
}

#[test]
fn sp_star_degrees_and_conditions() {
    for params in [HookParams::half(1, 1), HookParams::half(2, 1), HookParams::one(1, 1), HookParams::one(2, 1)] {
        for b in enumerate_hooks(params, 3, true) {
            let p = sp_star(&b).unwrap();
            assert_eq!(p.degree(), Some(b.size()), "{b}");
            assert!(lambda_natural_check(params, &p).unwrap());
        }
    }
}

/// Complete homogeneous symmetric polynomial of degree `k` in two variables.
fn h2(ctx: &supercapelli_core::exactmath::Context, k: i64) -> MultiPoly {
    if k < 0 {
        return MultiPoly::zero(ctx);
    }
    let k = k as u32;
    MultiPoly::from_terms(ctx, (0..=k).map(|a| (vec![a, k - a], rint(1)))).unwrap()
}

/// `det(h_{λ_i - i + j})` for two rows.
fn schur2(ctx: &supercapelli_core::exactmath::Context, parts: &[u32]) -> MultiPoly {
    let l = |i: usize| parts.get(i).copied().unwrap_or(0) as i64;
    let a = h2(ctx, l(0));
    let b = h2(ctx, l(0) + 1);
    let c = h2(ctx, l(1) - 1);
    let d = h2(ctx, l(1));
    &(&a * &d) - &(&b * &c)
}

#[test]
fn theta_one_tops_are_schur_polynomials() {
    let params = HookParams::one(2, 0);
    for parts in ["", "1", "2", "1,1", "2,1", "3"] {
        let b = HookPartition::parse(parts, params).unwrap();
        let fam = theta_one_family(&b).unwrap();
        let top = fam.natural_top(params).unwrap();
        assert_eq!(top, schur2(top.context(), b.parts()), "{b}");
    }
}

#[test]
fn theta_one_requires_theta_one() {
    let b = HookPartition::parse("1", HookParams::half(1, 1)).unwrap();
    assert!(theta_one_family(&b).is_err());
    assert_eq!(frobenius_context(1, 1).len(), 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normalization_of_random_permutations(v in Just((0..8usize).collect::<Vec<_>>()).prop_shuffle()) {
        let sigma = SuperPerm::new(v).unwrap();
        let c = sigma_normalize(&sigma).unwrap();
        prop_assert!(c.verify(&sigma));
        prop_assert_eq!(*c.boundaries.last().unwrap(), 4);
    }
}
