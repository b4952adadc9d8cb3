use serde_json::json;

use crate::error::{Error, Result};
use crate::weyl::SuperPerm;

/// Normal form of `σ ∈ S_{2d}` modulo `H_{2d}` on both sides:
/// `left ∘ σ ∘ right = τ_{d_0,d_1} ⋯ τ_{d_{r-1},d_r}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub boundaries: Vec<usize>,
    pub left: SuperPerm,
    pub right: SuperPerm,
}

impl CycleDecomposition {
    /// Block lengths `d_{s+1} - d_s`, in order.
    pub fn lengths(&self) -> Vec<usize> {
        self.boundaries.windows(2).map(|w| w[1] - w[0]).collect()
    }

    pub fn normal_form(&self) -> SuperPerm {
        SuperPerm::block_cycles(&self.lengths())
    }

    /// Recomputes `left ∘ σ ∘ right` and compares with the block product.
    pub fn verify(&self, sigma: &SuperPerm) -> bool {
        self.left.in_h() && self.right.in_h() && self.left.compose(sigma).compose(&self.right) == self.normal_form()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "boundaries": self.boundaries,
            "left": self.left.to_string(),
            "right": self.right.to_string(),
        })
    }
}

fn block_flips(d: usize, flip: impl Fn(usize) -> bool) -> SuperPerm {
    let v = (0..2 * d).map(|p| if flip(p / 2) { p ^ 1 } else { p }).collect();
    SuperPerm::new(v).expect("block flips form a permutation")
}

/// The permutation of `H_{2d}` moving block `s` onto block `f(s)` without
/// flipping it.
fn block_move(f: &[usize]) -> SuperPerm {
    let mut v = vec![0; 2 * f.len()];
    for (s, &t) in f.iter().enumerate() {
        v[2 * s] = 2 * t;
        v[2 * s + 1] = 2 * t + 1;
    }
    SuperPerm::new(v).expect("block images form a permutation")
}

/// Perfect matching in the bipartite multigraph joining `a_s` to `b_{s'}`
/// once for every label in `{σ(2s-1), σ(2s)} ∩ {2s'-1, 2s'}`. Every vertex has
/// degree two; each cycle is walked from its lowest unvisited `a`-vertex,
/// starting with the smaller label and alternating.
/// Returns the matched labels `b_{τ(s)}` (0-based positions).
fn matching(sigma: &SuperPerm) -> Vec<usize> {
    let d = sigma.len() / 2;
    let inv = sigma.inverse();
    let mut label: Vec<Option<usize>> = vec![None; d];
    for start in 0..d {
        if label[start].is_some() {
            continue;
        }
        let mut s = start;
        let mut v = sigma.at(2 * start).min(sigma.at(2 * start + 1));
        loop {
            label[s] = Some(v);
            let other = v ^ 1;
            s = inv.at(other) / 2;
            if label[s].is_some() {
                break;
            }
            let (p, q) = (sigma.at(2 * s), sigma.at(2 * s + 1));
            v = if p == other { q } else { p };
        }
    }
    label.into_iter().map(|l| l.expect("every a-vertex matched")).collect()
}

pub fn sigma_normalize(sigma: &SuperPerm) -> Result<CycleDecomposition> {
    if !sigma.len().is_multiple_of(2) {
        return Err(Error::InvalidInput(format!("{sigma} has odd length")));
    }
    let d = sigma.len() / 2;
    let b = matching(sigma);
    let inv = sigma.inverse();
    let a: Vec<usize> = b.iter().map(|&v| inv.at(v)).collect();
    let tau: Vec<usize> = b.iter().map(|&v| v / 2).collect();

    let mut to = vec![0; d];
    for s in 0..d {
        to[tau[s]] = s;
    }
    let s1 = block_move(&to);
    let s2 = block_flips(d, |s| (a[s] + b[s]) % 2 == 1);
    let s3 = s2.compose(&s1).compose(sigma);
    debug_assert!((0..d).all(|s| s3.at(a[s]) == a[s]));
    let s4 = block_flips(d, |s| a[s] == 2 * s + 1);
    let s5 = s4.compose(&s3).compose(&s4.inverse());

    let tau = SuperPerm::new((0..d).map(|s| (s5.at(2 * s + 1) - 1) / 2).collect())?;
    let mut circ = vec![0; d];
    let mut boundaries = vec![0];
    let mut base = 0;
    for cycle in tau.cycles() {
        let mut i = cycle[0];
        for k in 0..cycle.len() {
            circ[i] = base + k;
            i = tau.at(i);
        }
        base += cycle.len();
        boundaries.push(base);
    }
    let s_circ = block_move(&circ);
    let left = s_circ.compose(&s4).compose(&s2).compose(&s1);
    let right = s4.inverse().compose(&s_circ.inverse());
    let out = CycleDecomposition { boundaries, left, right };
    if !out.verify(sigma) {
        return Err(Error::InvalidInput(format!("normalization of {sigma} failed")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let id = sigma_normalize(&SuperPerm::identity(4)).unwrap();
        assert_eq!(id.boundaries, vec![0, 1, 2]);
        let c = sigma_normalize(&SuperPerm::parse("1,4,3,2").unwrap()).unwrap();
        assert_eq!(c.boundaries, vec![0, 2]);
    }

    #[test]
    fn all_of_s6() {
        for sigma in SuperPerm::all(6) {
            let c = sigma_normalize(&sigma).unwrap();
            assert!(c.verify(&sigma), "{sigma}");
        }
    }
}
