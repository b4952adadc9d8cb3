use std::sync::Arc;

use proptest::prelude::*;
use supercapelli_core::exactmath::{rat, rint, Rational};
use supercapelli_core::hooks::{enumerate_hooks, gamma_star_map, HookParams};
use supercapelli_core::superlie::{bracket, gelfand_element, SuperDims, UEAElement};
use supercapelli_core::weyl::*;

fn model(m: usize, n: usize) -> Arc<WModel> {
    Arc::new(WModel::new(SuperDims::new(m, n)))
}

/// Random element with bidegree at most (2, 2) built from a seed vector.
fn element_from(model: &Arc<WModel>, picks: &[(u8, u8, u8, u8, i8)]) -> WeylElement {
    let g = model.num_gens() as u8;
    let mut out = WeylElement::zero(model);
    for &(a, b, c, e, coef) in picks {
        let mut y = model.zero_mono();
        let mut d = model.zero_mono();
        for (is_y, v) in [(true, a), (true, b), (false, c), (false, e)] {
            if v < g {
                let slot = if is_y { &mut y } else { &mut d };
                slot[v as usize] += 1;
            }
        }
        let bad = (0..model.num_gens()).any(|k| model.is_odd(k) && (y[k] > 1 || d[k] > 1));
        if !bad {
            let t = WeylElement::from_terms(model, [((y, d), rint(coef as i64))]).unwrap();
            out = out.add(&t);
        }
    }
    out
}

fn picks() -> impl Strategy<Value = Vec<(u8, u8, u8, u8, i8)>> {
    prop::collection::vec((0u8..6, 0u8..6, 0u8..6, 0u8..6, -3i8..4), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn weyl_product_is_associative(a in picks(), b in picks(), c in picks()) {
        let m = model(1, 2);
        let (a, b, c) = (element_from(&m, &a), element_from(&m, &b), element_from(&m, &c));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn top_symbols_multiply(a in picks(), b in picks()) {
        let m = model(1, 2);
        let (a, b) = (element_from(&m, &a), element_from(&m, &b));
        let (da, db) = (a.order(), b.order());
        let lhs = a.mul(&b).symbol(da + db).unwrap();
        let rhs = a.symbol(da).unwrap().symbol_mul(&b.symbol(db).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn apply_is_a_homomorphism(a in picks(), b in picks()) {
        let m = model(1, 2);
        let (a, b) = (element_from(&m, &a), element_from(&m, &b));
        let p = GradedPieceBasis::new(&m, 2);
        for e in p.monomials() {
            let v = WPoly::monomial(&m, e.clone(), rint(1));
            prop_assert_eq!(a.mul(&b).apply_poly(&v), a.apply_poly(&b.apply_poly(&v)));
        }
    }
}

#[test]
fn rho_check_preserves_brackets() {
    let m = model(1, 2);
    let dims = m.dims();
    let mut rho = RhoCheck::new(&m);
    for a in dims.generators() {
        for b in dims.generators() {
            let lhs = rho.image(&UEAElement::from_terms(dims, bracket(dims, a, b).into_iter().map(|(g, c)| (vec![g], c))).unwrap());
            let rhs = rho.generator(a).supercommutator(rho.generator(b));
            assert_eq!(lhs, rhs, "{a:?} {b:?}");
        }
    }
}

#[test]
fn rho_on_symmetric_algebra_preserves_brackets() {
    let m = model(1, 2);
    let dims = m.dims();
    let basis = GradedPieceBasis::new(&m, 2);
    let act = |g: (u8, u8), p: &WPoly| rho_action(&m, (g.0 as usize, g.1 as usize), p);
    for a in dims.generators() {
        for b in dims.generators() {
            let pa = dims.gen_parity(a);
            let pb = dims.gen_parity(b);
            for e in basis.monomials() {
                let v = WPoly::monomial(&m, e.clone(), rint(1));
                let ab = act(a, &act(b, &v));
                let ba = act(b, &act(a, &v));
                let lhs = if pa * pb == 1 { ab.add(&ba) } else { ab.add(&ba.scale(&rint(-1))) };
                let mut rhs = WPoly::zero(&m);
                for (g, c) in bracket(dims, a, b) {
                    rhs = rhs.add(&act(g, &v).scale(&c));
                }
                assert_eq!(lhs, rhs, "{a:?} {b:?}");
            }
        }
    }
}

#[test]
fn first_gelfand_element_is_minus_twice_the_degree() {
    let m = model(1, 2);
    let e = rho_check(&m, &gelfand_element(m.dims(), 1).unwrap());
    for k in 0..=3 {
        let (_, mat) = apply(&e, k);
        let n = mat.rows();
        for i in 0..n {
            for j in 0..n {
                let expect = if i == j { rint(-2 * k as i64) } else { rint(0) };
                assert_eq!(mat.get(i, j), &expect);
            }
        }
    }
}

#[test]
fn t_sigma_is_invariant() {
    for (mm, nn, d) in [(1, 2, 2), (2, 1, 2), (1, 1, 3)] {
        let m = model(mm, nn);
        let rho = RhoCheck::new(&m);
        let gens = m.dims().generators();
        for sigma in SuperPerm::all(2 * d) {
            let t = t_sigma(&m, &sigma).unwrap();
            for &g in &gens {
                assert!(rho.generator(g).supercommutator(&t).is_zero(), "σ={sigma} g={g:?}");
            }
        }
    }
}

#[test]
fn t_sigma_is_bi_invariant_under_h() {
    let m = model(1, 2);
    let h = SuperPerm::h_group(2);
    for sigma in SuperPerm::all(4) {
        let t = t_sigma(&m, &sigma).unwrap();
        for a in &h {
            for b in &h {
                let s = a.compose(&sigma).compose(b);
                assert_eq!(t_sigma(&m, &s).unwrap(), t, "{sigma} {a} {b}");
            }
        }
    }
}

#[test]
fn block_permutations_concatenate() {
    let m = model(2, 1);
    let one = t_sigma(&m, &SuperPerm::identity(2)).unwrap();
    let two = t_sigma(&m, &SuperPerm::identity(4)).unwrap();
    assert_eq!(two, one.symbol_mul(&one));
    let cyc = t_sigma(&m, &SuperPerm::tau(4, 0, 2)).unwrap();
    let joined = t_sigma(&m, &SuperPerm::block_cycles(&[2, 1])).unwrap();
    assert_eq!(joined, cyc.symbol_mul(&one));
}

#[test]
fn symbol_of_gelfand_elements() {
    for (mm, nn) in [(1, 1), (2, 1)] {
        let m = model(mm, nn);
        let mut rho = RhoCheck::new(&m);
        for d in 1..=3 {
            let s = rho.image(&gelfand_element(m.dims(), d).unwrap()).symbol(d).unwrap();
            let t = t_sigma(&m, &SuperPerm::tau(2 * d, 0, d)).unwrap();
            assert_eq!(s, t.scale(&rat(-2, 1).pow(d as i32)), "({mm}|{nn}) d={d}");
            if d == 1 {
                continue;
            }
            assert_ne!(t, s.scale(&rat(-2, 1).pow(d as i32)));
        }
    }
}

#[test]
fn invariant_spaces_have_hook_dimension() {
    let m = model(1, 2);
    for d in 1..=3 {
        let sp = invariant_symbol_space(&m, d).unwrap();
        assert!(sp.verified());
        assert_eq!(sp.dim(), enumerate_hooks(HookParams::half(1, 1), d as u32, false).len(), "d={d}");
    }
    let sp = invariant_symbol_space(&model(1, 0), 1).unwrap();
    assert_eq!(sp.dim(), 1);
}

fn decomposition_check(m: usize, n: usize, k: usize) {
    let data = CapelliData::new(m, n);
    let rho = data.rho();
    let basis = GradedPieceBasis::new(data.model(), k);
    let mut total = 0;
    let mut found = 0;
    for b in data.hooks(k) {
        let mu = gamma_star_map(&b).unwrap().to_cartan().unwrap();
        let v = highest_weight_vectors(rho, k, &mu);
        assert_eq!(v.len(), 1, "{b}");
        found += 1;
        total += cyclic_span_dim(rho, &v[0]);
    }
    assert_eq!(total, basis.len(), "(m,2n)=({m},{}) k={k}", 2 * n);
    // every highest weight vector of degree k has one of the expected weights
    let mut all = 0;
    let mut weights: Vec<Vec<i64>> = basis.monomials().iter().map(|e| mono_weight(data.model(), e)).collect();
    weights.sort();
    weights.dedup();
    for w in weights {
        let mu: Vec<Rational> = w.iter().map(|&x| rint(x)).collect();
        all += highest_weight_vectors(rho, k, &mu).len();
    }
    assert_eq!(all, found);
}

#[test]
fn graded_pieces_decompose() {
    for k in 0..=3 {
        decomposition_check(1, 1, k);
    }
    for k in 0..=2 {
        decomposition_check(2, 1, k);
    }
}

#[test]
fn capelli_operators_act_by_scalars() {
    let mut data = CapelliData::new(1, 1);
    for d in 1..=2usize {
        for b in data.hooks(d) {
            let op = data.capelli_operator(&b).unwrap();
            for k in 0..=d + 1 {
                for mu in data.hooks(k) {
                    let ev = data.eigenvalue(&op, &mu).unwrap();
                    if k < d {
                        assert_eq!(ev, rint(0));
                    }
                }
            }
            // annihilates everything of lower degree
            let (_, mat) = apply(&op, d - 1);
            assert_eq!(mat.rank(), 0);
        }
    }
}

#[test]
fn spherical_vectors_are_k_invariant() {
    let mut data = CapelliData::new(1, 1);
    let ks = k_spanning_set(1, 1);
    for d in 0..=2 {
        for b in data.hooks(d) {
            let v = spherical_vector(&mut data, &b).unwrap();
            let mut rho = RhoCheck::new(data.model());
            for x in &ks {
                assert!(rho.image(x).apply_poly(&v).is_zero(), "{b} {x}");
            }
            let p = spherical_poly(&mut data, &b).unwrap();
            assert!(!p.is_zero());
            assert_eq!(p.degree(), Some(d as u32));
            assert_eq!(p.homogeneous_part(d as u32), p);
        }
    }
}
