use num_traits::Zero;

use super::weight::weight_context;
use super::{Frame, HookParams, HookPartition, Theta};
use crate::error::Result;
use crate::exactmath::{rat, rint, AffineForm, AffineSubstitution, Context, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusPoint {
    pub x: Vec<Rational>,
    pub y: Vec<Rational>,
}

impl FrobeniusPoint {
    pub fn coords(&self) -> Vec<Rational> {
        self.x.iter().chain(&self.y).cloned().collect()
    }
}

/// Variables `x1..xm, y1..yn`.
pub fn frobenius_context(m: usize, n: usize) -> Context {
    Context::new(
        (1..=m)
            .map(|k| format!("x{k}"))
            .chain((1..=n).map(|l| format!("y{l}"))),
    )
}

fn x_shift(params: HookParams, k: usize) -> Rational {
    let HookParams { m, n, theta } = params;
    let (m, n, k) = (m as i64, n as i64, k as i64);
    match theta {
        Theta::Half => rat(2 * k - 1, 4) + rat(4 * n - m, 4),
        Theta::One => rint(k) - rat(1 - n + m, 2),
    }
}

fn y_shift(params: HookParams, l: usize) -> Rational {
    let HookParams { m, n, theta } = params;
    let (m, n, l) = (m as i64, n as i64, l as i64);
    match theta {
        Theta::Half => rint(2 * l - 1) - rat(4 * n + m, 2),
        Theta::One => rint(l) - rat(m + n + 1, 2),
    }
}

/// The Frobenius coordinates `(x_1(b), .., y_n(b))`.
pub fn frobenius_point(b: &HookPartition) -> FrobeniusPoint {
    let p = b.params();
    FrobeniusPoint {
        x: (1..=p.m).map(|k| rint(b.part(k) as i64) - x_shift(p, k)).collect(),
        y: (1..=p.n).map(|l| rint(b.star(l) as i64) - y_shift(p, l)).collect(),
    }
}

/// The affine map `Ψ` from Frobenius coordinates to weight coordinates,
/// characterised by `Ψ(F(b)) = Γ(b)`.
pub fn frobenius_affine_map(params: HookParams) -> AffineSubstitution {
    let HookParams { m, n, theta } = params;
    let (frame, scale) = match theta {
        Theta::Half => (Frame::AStarGamma, rint(2)),
        Theta::One => (Frame::HStarEps, rint(1)),
    };
    let target = frobenius_context(m, n);
    let form = |i: usize, shift: Rational| {
        let mut linear = vec![Rational::zero(); m + n];
        linear[i] = scale.clone();
        AffineForm { linear, constant: &scale * shift }
    };
    let images = (1..=m)
        .map(|k| form(k - 1, x_shift(params, k)))
        .chain((1..=n).map(|l| form(m + l - 1, y_shift(params, l))))
        .collect();
    AffineSubstitution::new(weight_context(frame, m, n), target, images)
        .expect("affine map dimensions agree")
}

/// `𝓕(p) = p ∘ Ψ`.
pub fn frobenius_transform(params: HookParams, p: &crate::exactmath::MultiPoly) -> Result<crate::exactmath::MultiPoly> {
    frobenius_affine_map(params).compose(p)
}
