use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use supercapelli_core::capelli::{
    lambda_natural_check, symbol_preimage, theta_one_family, verify_sv, CapelliSolver,
};
use supercapelli_core::exactmath::{rint, Rational};
use supercapelli_core::hooks::{dual_weight, enumerate_hooks, gamma_star_map, HookParams};
use supercapelli_core::superlie::{
    gelfand_element, hc_project, omega, omega_cartan, supercommutator, HcSign, PbwNormalizer, PbwOrder, SuperDims,
    UEAElement,
};
use supercapelli_core::weyl::{
    k_spanning_set, spherical_poly, spherical_vector, t_sigma, CapelliData, RhoCheck, SuperPerm, WModel,
};
use supercapelli_core::{Error, Result};

use crate::report::VerificationReport;

/// Suite names, in the order of the acceptance criteria they check.
pub const SUITES: [&str; 11] = [
    "centrality",
    "lem28",
    "capelli",
    "coherence",
    "vanishing",
    "main",
    "sv",
    "decomposition",
    "spherical",
    "theta1",
    "duality",
];

/// Seed of the sample of `S_6` used by the `capelli` suite.
pub const S6_SEED: u64 = 20_240_611;
pub const S6_SAMPLE: usize = 20;

/// Overrides for the default ranks of a suite.
#[derive(Clone, Copy, Debug, Default)]
pub struct SuiteOptions {
    pub rank: Option<(usize, usize)>,
    pub dmax: Option<usize>,
}

impl SuiteOptions {
    fn ranks(&self, defaults: &[(usize, usize, usize)]) -> Vec<(usize, usize, usize)> {
        match self.rank {
            Some((m, n)) => {
                let d = defaults.iter().map(|r| r.2).max().unwrap_or(2);
                vec![(m, n, self.dmax.unwrap_or(d))]
            }
            None => defaults
                .iter()
                .map(|&(m, n, d)| (m, n, self.dmax.unwrap_or(d)))
                .collect(),
        }
    }
}

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<VerificationReport> {
    Ok(match name {
        "centrality" => centrality(opts),
        "lem28" => lem28(opts),
        "capelli" => capelli(opts),
        "coherence" => coherence(opts),
        "vanishing" => vanishing(opts),
        "main" => main_theorem(opts),
        "sv" => sv(opts),
        "decomposition" => decomposition(opts),
        "spherical" => spherical(opts),
        "theta1" => theta1(opts),
        "duality" => duality(opts),
        _ => return Err(Error::InvalidInput(format!("unknown suite {name:?}"))),
    })
}

fn factorial(d: usize) -> Rational {
    (1..=d as i64).map(rint).fold(rint(1), |a, b| a * b)
}

fn gl(m: usize, n: usize) -> String {
    format!("gl({m}|{n})")
}

/// `[str(𝐄^d), E_{k,l}]` normalizes to zero.
pub fn centrality(opts: &SuiteOptions) -> VerificationReport {
    let mut r = VerificationReport::new("centrality");
    for (m, n, dmax) in opts.ranks(&[(1, 1, 4), (1, 2, 4), (2, 1, 4), (2, 2, 4)]) {
        let dims = SuperDims::new(m, n);
        let mut norm = PbwNormalizer::new(dims, PbwOrder::LowerFirst);
        for d in 1..=dmax {
            r.case(format!("{} d={d}", gl(m, n)), || {
                let z = gelfand_element(dims, d)?;
                let mut bad = Vec::new();
                for g in dims.generators() {
                    let c = supercommutator(&z, &UEAElement::generator(dims, g))?;
                    if !norm.normalize(&c).is_zero() {
                        bad.push(format!("E({},{})", dims.label(g.0 as usize), dims.label(g.1 as usize)));
                    }
                }
                Ok((bad.is_empty(), json!({ "noncommuting": bad })))
            });
        }
    }
    r
}

/// `t_{(2,4,..,2d)} = (-2)^d ŝ_d(ρ̌(str 𝐄^d))`. The witness also records
/// whether `ŝ_d(ρ̌(str 𝐄^d)) = (-2)^d t_{(2,4,..,2d)}` holds.
pub fn lem28(opts: &SuiteOptions) -> VerificationReport {
    let mut r = VerificationReport::new("lem28");
    for (m, n, dmax) in opts.ranks(&[(1, 1, 3), (2, 1, 3)]) {
        let model = Arc::new(WModel::new(SuperDims::new(m, n)));
        let mut rho = RhoCheck::new(&model);
        for d in 1..=dmax {
            r.case(format!("{} d={d}", gl(m, n)), || {
                let s = rho.image(&gelfand_element(model.dims(), d)?).symbol(d)?;
                let t = t_sigma(&model, &SuperPerm::tau(2 * d, 0, d))?;
                let scale = rint(-2).pow(d as i32);
                let stated = t == s.scale(&scale);
                let reversed = s == t.scale(&scale);
                Ok((stated, json!({ "t_equals_scaled_symbol": stated, "symbol_equals_scaled_t": reversed })))
            });
        }
    }
    r
}

/// The fixed sample of `S_6` checked by the `capelli` suite.
pub fn s6_sample() -> Vec<SuperPerm> {
    let mut rng = ChaCha8Rng::seed_from_u64(S6_SEED);
    let mut v: Vec<usize> = (0..6).collect();
    (0..S6_SAMPLE)
        .map(|_| {
            v.shuffle(&mut rng);
            SuperPerm::new(v.clone()).expect("shuffle is a permutation")
        })
        .collect()
}

/// Symbols of `ρ̌(symbol_preimage(σ))` against `t_σ`, and `ρ̌(z_λ) = D_λ`.
pub fn capelli(opts: &SuiteOptions) -> VerificationReport {
    let mut r = VerificationReport::new("capelli");
    let ranks = opts.ranks(&[(1, 1, 2), (2, 1, 2)]);
    let (m0, n0, _) = ranks[0];
    let model = Arc::new(WModel::new(SuperDims::new(m0, 2 * n0)));
    let mut rho = RhoCheck::new(&model);
    let mut perms: Vec<(String, SuperPerm)> = SuperPerm::all(4).into_iter().map(|s| ("S4".to_string(), s)).collect();
    perms.extend(s6_sample().into_iter().map(|s| ("S6".to_string(), s)));
    for (group, sigma) in perms {
        r.case(format!("symbol {} {group} σ={sigma}", gl(m0, 2 * n0)), || {
            let z = symbol_preimage(model.dims(), &sigma)?;
            let s = rho.image(&z).symbol(sigma.len() / 2)?;
            Ok((s == t_sigma(&model, &sigma)?, Value::Null))
        });
    }
    for (m, n, dmax) in ranks {
        let mut solver = CapelliSolver::new(m, n);
        for d in 0..=dmax {
            for b in solver.hooks(d) {
                r.case(format!("preimage {} b={b}", gl(m, 2 * n)), || {
                    let op = solver.capelli_operator(&b)?;
                    let image = solver.preimage_image(&b)?;
                    Ok((image == op, json!({ "terms": op.num_terms() })))
                });
            }
        }
    }
    r
}

/// `c_λ` by the HC⁺ route equals the interpolation route and the direct
/// spectrum of `D_λ` on highest weight vectors.
pub fn coherence(opts: &SuiteOptions) -> VerificationReport {
    let mut r = VerificationReport::new("coherence");
    for (m, n, dmax) in opts.ranks(&[(1, 1, 3), (2, 1, 2)]) {
        let mu_max = (dmax + 1).max(4);
        let mut solver = CapelliSolver::new(m, n);
        for d in 0..=dmax {
            for b in solver.hooks(d) {
                r.case(format!("{} b={b}", gl(m, 2 * n)), || {
                    let hc = solver.c_poly_hc(&b)?;
                    let interp = solver.c_poly_interp(&b)?;
                    let mut mismatches = Vec::new();
                    for k in 0..=mu_max {
                        for mu in solver.hooks(k) {
                            let direct = solver.direct_eigenvalue(&b, &mu)?;
                            if hc.eval(&gamma_star_map(&mu)?)? != direct {
                                mismatches.push(mu.to_string());
                            }
                        }
                    }
                    let same = hc == interp;
                    Ok((same && mismatches.is_empty(), json!({ "hc_equals_interp": same, "spectrum_mismatches": mismatches })))
                });
            }
        }
    }
    r
}

/// `c_λ(λ) = d!` and `c_λ(μ) = 0` for the other `|μ| <= d`.
pub fn vanishing(opts: &SuiteOptions) -> VerificationReport {
    let mut r = VerificationReport::new("vanishing");
    for (m, n, dmax) in opts.ranks(&[(1, 1, 3), (2, 1, 2)]) {
        let mut solver = CapelliSolver::new(m, n);
        for d in 0..=dmax {
            for b in solver.hooks(d) {
                r.case(format!("{} b={b}", gl(m, 2 * n)), || {
                    let c = solver.c_poly_hc(&b)?;
                    let mut bad = Vec::new();
                    for mu in enumerate_hooks(solver.params(), d as u32, true) {
                        let expect = if mu == b { factorial(d) } else { rint(0) };
                        if c.eval(&gamma_star_map(&mu)?)? != expect {
                            bad.push(mu.to_string());
                        }
                    }
                    Ok((bad.is_empty(), json!({ "wrong_values_at": bad })))
                });
            }
        }
    }
    r
}

/// Top homogeneous part of `c_λ` equals `d_λ`.
pub fn main_theorem(opts: &SuiteOptions) -> VerificationReport {
    let mut r = VerificationReport::new("main");
    for (m, n, dmax) in opts.ranks(&[(1, 0, 1), (1, 1, 3), (2, 1, 2)]) {
        let mut solver = CapelliSolver::new(m, n);
        for d in 0..=dmax {
            for b in solver.hooks(d) {
                r.case(format!("{} b={b}", gl(m, 2 * n)), || {
                    let rep = solver.verify_main(&b)?;
                    Ok((rep.pass(), rep.to_json()))
                });
            }
        }
    }
    r
}

/// `𝓕(c*_λ) = (d!/H(b)) SP*_b`.
pub fn sv(opts: &SuiteOptions) -> VerificationReport {
    let mut r = VerificationReport::new("sv");
    for (m, n, dmax) in opts.ranks(&[(1, 1, 3), (2, 1, 2)]) {
        let mut solver = CapelliSolver::new(m, n);
        for d in 0..=dmax {
            for b in solver.hooks(d) {
                r.case(format!("({m}|{n}) b={b}"), || {
                    let rep = verify_sv(&mut solver, &b)?;
                    Ok((rep.pass(), rep.to_json()))
                });
            }
        }
    }
    r
}

/// Highest weight vectors in `𝒫^k(W)` are indexed by `E*_k` and their
/// cyclic spans fill `𝒫^k(W)`.
pub fn decomposition(opts: &SuiteOptions) -> VerificationReport {
    let mut r = VerificationReport::new("decomposition");
    for (m, n, kmax) in opts.ranks(&[(1, 1, 3), (2, 1, 3)]) {
        let data = CapelliData::new(m, n);
        for k in 0..=kmax {
            r.case(format!("{} k={k}", gl(m, 2 * n)), || {
                let dec = data.decomposition(k);
                Ok((
                    dec.holds(),
                    json!({
                        "piece_dim": dec.piece_dim,
                        "hooks": dec.hooks,
                        "hw_vectors": dec.hw_total,
                        "span_total": dec.span_total,
                        "one_per_hook": dec.expected_weights,
                    }),
                ))
            });
        }
    }
    r
}

/// `𝐝_λ` is a nonzero `𝔨`-invariant and `d_λ` is nonzero.
pub fn spherical(opts: &SuiteOptions) -> VerificationReport {
    let mut r = VerificationReport::new("spherical");
    for (m, n, dmax) in opts.ranks(&[(1, 1, 3), (2, 1, 3)]) {
        let mut data = CapelliData::new(m, n);
        let ks = k_spanning_set(m, n);
        for d in 0..=dmax {
            for b in data.hooks(d) {
                r.case(format!("{} b={b}", gl(m, 2 * n)), || {
                    let v = spherical_vector(&mut data, &b)?;
                    let mut moved = Vec::new();
                    for x in &ks {
                        if !data.rho_mut().image(x).apply_poly(&v).is_zero() {
                            moved.push(x.to_string());
                        }
                    }
                    let p = spherical_poly(&mut data, &b)?;
                    let ok = !v.is_zero() && moved.is_empty() && !p.is_zero();
                    Ok((ok, json!({ "not_annihilated_by": moved, "d_lambda_zero": p.is_zero() })))
                });
            }
        }
    }
    r
}

/// `SP*_b` for `θ = 1`: membership in `Λ^♮_{m,n,1}` and exact degree.
pub fn theta1(opts: &SuiteOptions) -> VerificationReport {
    let mut r = VerificationReport::new("theta1");
    for (m, n, dmax) in opts.ranks(&[(1, 1, 3), (2, 1, 3), (2, 0, 3)]) {
        let params = HookParams::one(m, n);
        for b in enumerate_hooks(params, dmax as u32, true) {
            r.case(format!("θ=1 ({m}|{n}) b={b}"), || {
                let fam = theta_one_family(&b)?;
                let member = lambda_natural_check(params, &fam.s_star)?;
                let degree = fam.s_star.degree() == Some(b.size());
                Ok((member && degree, json!({ "in_lambda_natural": member, "degree_ok": degree })))
            });
        }
    }
    r
}

/// `c_λ(μ) = c*_λ(μ*)`, and `HC⁻(ω(z)) = ω(HC⁺(z))` on Gelfand elements.
pub fn duality(opts: &SuiteOptions) -> VerificationReport {
    let mut r = VerificationReport::new("duality");
    for (m, n, dmax) in opts.ranks(&[(1, 1, 3)]) {
        let mut solver = CapelliSolver::new(m, n);
        for d in 0..=dmax {
            for b in solver.hooks(d) {
                r.case(format!("pointwise {} b={b}", gl(m, 2 * n)), || {
                    let c = solver.c_poly_hc(&b)?;
                    let cs = solver.c_star_poly(&b)?;
                    let mut bad = Vec::new();
                    for mu in enumerate_hooks(solver.params(), dmax as u32, true) {
                        let w = gamma_star_map(&mu)?;
                        if c.eval(&w)? != cs.eval(&dual_weight(&w)?)? {
                            bad.push(mu.to_string());
                        }
                    }
                    Ok((bad.is_empty(), json!({ "mismatches": bad })))
                });
            }
        }
        let dims = SuperDims::new(m, 2 * n);
        for d in 1..=dmax {
            r.case(format!("omega {} d={d}", gl(m, 2 * n)), || {
                let z = gelfand_element(dims, d)?;
                Ok((hc_project(&omega(&z), HcSign::Minus) == omega_cartan(&z.hc_plus()), Value::Null))
            });
        }
    }
    r
}
