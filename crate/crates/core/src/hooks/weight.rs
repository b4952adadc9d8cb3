use std::fmt;

use num_traits::Zero;

use super::{enumerate_hooks, HookParams, HookPartition, Theta};
use crate::error::{Error, Result};
use crate::exactmath::{rint, Context, Rational};
use crate::exactmath::fmt_rational;

/// Coordinate frame of a weight. `AStarGamma` uses the basis `γ_i` of `𝔞*`
/// (the `θ = 1/2` family); `HStarEps` uses `ε_i` of `𝔥*` (the `θ = 1` family).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Frame {
    AStarGamma,
    HStarEps,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    pub frame: Frame,
    pub m: usize,
    pub n: usize,
    pub coords: Vec<Rational>,
}

impl Weight {
    pub fn new(frame: Frame, m: usize, n: usize, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != m + n {
            return Err(Error::LengthMismatch { expected: m + n, got: coords.len() });
        }
        Ok(Weight { frame, m, n, coords })
    }

    pub fn zero(frame: Frame, m: usize, n: usize) -> Self {
        Weight { frame, m, n, coords: vec![Rational::zero(); m + n] }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn even(&self) -> &[Rational] {
        &self.coords[..self.m]
    }

    pub fn odd(&self) -> &[Rational] {
        &self.coords[self.m..]
    }

    pub fn expect_frame(&self, frame: Frame) -> Result<()> {
        if self.frame != frame {
            return Err(Error::FrameMismatch(format!("expected {frame:?}, got {:?}", self.frame)));
        }
        Ok(())
    }

    /// Coordinates on the Cartan subalgebra of `gl(m|2n)`: the `𝔱`-component
    /// is zero, so `γ_l̄` contributes half its coefficient to each of
    /// `E_{2l-1,2l-1}` and `E_{2l,2l}` (odd indices).
    pub fn to_cartan(&self) -> Result<Vec<Rational>> {
        self.expect_frame(Frame::AStarGamma)?;
        let mut out: Vec<Rational> = self.even().to_vec();
        for a in self.odd() {
            let h = a / rint(2);
            out.push(h.clone());
            out.push(h);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "frame": match self.frame { Frame::AStarGamma => "a_star_gamma", Frame::HStarEps => "h_star_eps" },
            "even": self.even().iter().map(fmt_rational).collect::<Vec<_>>(),
            "odd": self.odd().iter().map(fmt_rational).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |xs: &[Rational]| -> String {
            xs.iter()
                .map(crate::exactmath::rational_short)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "({} ; {})", show(self.even()), show(self.odd()))
    }
}

/// Variables naming the coordinates of a weight in the given frame.
pub fn weight_context(frame: Frame, m: usize, n: usize) -> Context {
    let p = match frame {
        Frame::AStarGamma => "a",
        Frame::HStarEps => "e",
    };
    Context::new(
        (1..=m)
            .map(|k| format!("{p}{k}"))
            .chain((1..=n).map(|l| format!("{p}{l}b"))),
    )
}

/// `Γ(b)`.
pub fn gamma_map(b: &HookPartition) -> Weight {
    let HookParams { m, n, theta } = b.params();
    let scale = match theta {
        Theta::Half => 2,
        Theta::One => 1,
    };
    let frame = match theta {
        Theta::Half => Frame::AStarGamma,
        Theta::One => Frame::HStarEps,
    };
    let coords = (1..=m)
        .map(|k| rint(scale * b.part(k) as i64))
        .chain((1..=n).map(|l| rint(scale * b.star(l) as i64)))
        .collect();
    Weight { frame, m, n, coords }
}

/// `Γ*(b)`, the highest weight of the summand of polynomials on
/// `S^2(C^{m|2n})` labelled by `b`.
pub fn gamma_star_map(b: &HookPartition) -> Result<Weight> {
    let HookParams { m, n, theta } = b.params();
    if theta != Theta::Half {
        return Err(Error::FrameMismatch("Γ* is only defined for θ = 1/2".into()));
    }
    let t = b.transpose();
    let coords = (1..=m)
        .map(|i| {
            let p = b.part(m + 1 - i) as i64;
            rint(-2 * (p - n as i64).max(0))
        })
        .chain((1..=n).map(|j| {
            let p = t.get(n - j).copied().unwrap_or(0) as i64;
            rint(-2 * p)
        }))
        .collect();
    Ok(Weight { frame: Frame::AStarGamma, m, n, coords })
}

pub fn dual_weight(mu: &Weight) -> Result<Weight> {
    dual_weight_with_cap(mu, 64)
}

/// `μ*`: the weight `Γ(b)` for the unique `b` with `Γ*(b) = μ`.
pub fn dual_weight_with_cap(mu: &Weight, cap: u32) -> Result<Weight> {
    mu.expect_frame(Frame::AStarGamma)?;
    let params = HookParams::half(mu.m, mu.n);
    for d in 0..=cap {
        for b in enumerate_hooks(params, d, false) {
            if &gamma_star_map(&b)? == mu {
                return Ok(gamma_map(&b));
            }
        }
    }
    Err(Error::InvalidInput(format!("{mu} is not of the form Γ*(b) with |b| <= {cap}")))
}
