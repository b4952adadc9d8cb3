use super::pbw::{PbwNormalizer, PbwOrder};
use super::uea::UEAElement;
use super::SuperDims;
use crate::error::{Error, Result};
use crate::exactmath::{rat, rint, Context, MultiPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HcSign {
    Plus,
    Minus,
}

/// Variables `E(1,1), .., E(nb,nb)` of `U(𝔥)`.
pub fn cartan_context(dims: SuperDims) -> Context {
    Context::new((0..dims.size()).map(|i| {
        let l = dims.label(i);
        format!("E({l},{l})")
    }))
}

/// Variables `h1, .., hm, h1b, .., hnb` of `U(𝔞)` for `gl(m|2n)`.
pub fn a_context(m: usize, n: usize) -> Context {
    Context::new(
        (1..=m)
            .map(|k| format!("h{k}"))
            .chain((1..=n).map(|l| format!("h{l}b"))),
    )
}

fn project(a: &UEAElement, normalizer: &mut PbwNormalizer) -> MultiPoly {
    let dims = a.dims();
    let ctx = cartan_context(dims);
    let normal = normalizer.normalize(a);
    let mut terms = Vec::new();
    for (w, c) in normal.terms() {
        if w.iter().all(|&(i, j)| i == j) {
            let mut e = vec![0u32; dims.size()];
            for &(i, _) in w {
                e[i as usize] += 1;
            }
            terms.push((e, c.clone()));
        }
    }
    MultiPoly::from_terms(&ctx, terms).expect("exponent length matches")
}

/// Harish-Chandra projection onto `U(𝔥)`: normalize with the lowering block
/// first (`Plus`) or the raising block first (`Minus`) and keep the purely
/// diagonal words.
pub fn hc_project(a: &UEAElement, sign: HcSign) -> MultiPoly {
    let order = match sign {
        HcSign::Plus => PbwOrder::LowerFirst,
        HcSign::Minus => PbwOrder::RaisingFirst,
    };
    project(a, &mut PbwNormalizer::new(a.dims(), order))
}

/// `ω` on `U(𝔥)`: every variable changes sign.
pub fn omega_cartan(p: &MultiPoly) -> MultiPoly {
    let ctx = p.context().clone();
    MultiPoly::from_terms(
        &ctx,
        p.terms().map(|(e, c)| {
            let c = if e.degree() % 2 == 0 { c.clone() } else { -c.clone() };
            (e.0.clone(), c)
        }),
    )
    .expect("same context")
}

fn half_odd(dims: SuperDims) -> Result<usize> {
    if !dims.n.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!("{dims}: odd dimension must be even here")));
    }
    Ok(dims.n / 2)
}

/// Restriction to `𝔞`: `E_{k,k} -> h_k` and `E_{2l-1,2l-1}, E_{2l,2l} -> h_l/2`
/// on the odd block.
pub fn q_projection(c: &MultiPoly, dims: SuperDims) -> Result<MultiPoly> {
    let n = half_odd(dims)?;
    if c.context() != &cartan_context(dims) {
        return Err(Error::ContextMismatch("q expects a Cartan polynomial".into()));
    }
    let a = a_context(dims.m, n);
    let mut images = Vec::with_capacity(dims.size());
    for k in 0..dims.m {
        images.push(MultiPoly::var(&a, k));
    }
    for t in 0..dims.n {
        images.push(MultiPoly::var(&a, dims.m + t / 2).scale(&rat(1, 2)));
    }
    c.substitute(&a, &images)
}

/// `G_d = Σ_k (E_kk + (m+1)/2 - n - k)^d + (-1)^{d-1} Σ_l (E_ll + (m+1)/2 + n - l)^d`
/// on `gl(m|2n)`, the second sum over the odd indices.
pub fn gd_element(dims: SuperDims, d: u32) -> Result<MultiPoly> {
    if d == 0 {
        return Err(Error::InvalidInput("G_d starts at d = 1".into()));
    }
    let n = half_odd(dims)? as i64;
    let m = dims.m as i64;
    let ctx = cartan_context(dims);
    let mut out = MultiPoly::zero(&ctx);
    for k in 1..=m {
        let shift = rat(m + 1, 2) - rint(n + k);
        let lin = &MultiPoly::var(&ctx, (k - 1) as usize) + &MultiPoly::constant(&ctx, shift);
        out = &out + &lin.pow(d);
    }
    let sign = if d % 2 == 1 { rint(1) } else { rint(-1) };
    for l in 1..=2 * n {
        let shift = rat(m + 1, 2) + rint(n - l);
        let lin = &MultiPoly::var(&ctx, (m + l - 1) as usize) + &MultiPoly::constant(&ctx, shift);
        out = &out + &lin.pow(d).scale(&sign);
    }
    Ok(out)
}

impl UEAElement {
    pub fn hc_plus(&self) -> MultiPoly {
        hc_project(self, HcSign::Plus)
    }

    pub fn hc_minus(&self) -> MultiPoly {
        hc_project(self, HcSign::Minus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superlie::{gelfand_element, omega};

    #[test]
    fn hc_examples() {
        let d = SuperDims::new(1, 1);
        let ctx = cartan_context(d);
        let e = |i| MultiPoly::var(&ctx, i);
        assert_eq!(gelfand_element(d, 1).unwrap().hc_plus(), &e(0) + &e(1));
        let expect = &(&(&e(0) * &e(0)) - &(&e(1) * &e(1))) - &(&e(0) + &e(1));
        assert_eq!(gelfand_element(d, 2).unwrap().hc_plus(), expect);
    }

    #[test]
    fn omega_intertwines_hc() {
        for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            let dims = SuperDims::new(m, n);
            for k in 1..=3 {
                let z = gelfand_element(dims, k).unwrap();
                assert_eq!(omega(&z).hc_minus(), omega_cartan(&z.hc_plus()), "{dims} d={k}");
            }
        }
    }

    #[test]
    fn q_examples() {
        let dims = SuperDims::new(1, 2);
        let ctx = cartan_context(dims);
        let a = a_context(1, 1);
        let h = |i| MultiPoly::var(&a, i);
        let sum = &(&MultiPoly::var(&ctx, 0) + &MultiPoly::var(&ctx, 1)) + &MultiPoly::var(&ctx, 2);
        assert_eq!(q_projection(&sum, dims).unwrap(), &h(0) + &h(1));
        let sq = MultiPoly::var(&ctx, 0).pow(2);
        assert_eq!(q_projection(&sq, dims).unwrap(), h(0).pow(2));
        let mixed = &MultiPoly::var(&ctx, 1) * &MultiPoly::var(&ctx, 2);
        assert_eq!(q_projection(&mixed, dims).unwrap(), h(1).pow(2).scale(&rat(1, 4)));
        assert!(q_projection(&sum, SuperDims::new(1, 1)).is_err());
    }

    #[test]
    fn gd_examples() {
        let dims = SuperDims::new(1, 2);
        let ctx = cartan_context(dims);
        let sum = &(&MultiPoly::var(&ctx, 0) + &MultiPoly::var(&ctx, 1)) + &MultiPoly::var(&ctx, 2);
        assert_eq!(gd_element(dims, 1).unwrap(), sum);
        let g2 = gd_element(dims, 2).unwrap();
        assert_eq!(g2.coeff(&[0, 2, 0]), rint(-1));
        assert_eq!(g2.coeff(&[2, 0, 0]), rint(1));
    }
}
