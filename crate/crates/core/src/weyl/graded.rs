use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::element::{deg, WeylElement};
use super::{add_into, WModel, WMono};
use crate::exactmath::{fmt_rational, rational_short, RationalMatrix, Rational, SparseVec};

/// Polynomial in the `y`-coordinates (an element of `𝒫(W)`), or in the
/// `x`-coordinates when used for `𝒮(W)`.
#[derive(Clone, PartialEq, Eq)]
pub struct WPoly {
    model: Arc<WModel>,
    terms: BTreeMap<WMono, Rational>,
}

impl fmt::Debug for WPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WPoly({})", self.render("y"))
    }
}

impl WPoly {
    pub fn zero(model: &Arc<WModel>) -> Self {
        WPoly { model: model.clone(), terms: BTreeMap::new() }
    }

    pub fn monomial(model: &Arc<WModel>, e: WMono, c: Rational) -> Self {
        let mut p = Self::zero(model);
        add_into(&mut p.terms, e, c);
        p
    }

    pub fn from_sparse(model: &Arc<WModel>, v: SparseVec<WMono>) -> Self {
        WPoly { model: model.clone(), terms: v.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn model(&self) -> &Arc<WModel> {
        &self.model
    }

    pub fn terms(&self) -> &BTreeMap<WMono, Rational> {
        &self.terms
    }

    pub fn into_sparse(self) -> SparseVec<WMono> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| deg(e)).max()
    }

    pub fn add_term(&mut self, e: WMono, c: Rational) {
        add_into(&mut self.terms, e, c);
    }

    pub fn add(&self, other: &WPoly) -> WPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> WPoly {
        let mut out = WPoly::zero(&self.model);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    /// The scalar `c` with `self = c · other`, if any.
    pub fn ratio_to(&self, other: &WPoly) -> Option<Rational> {
        let (e, v) = other.terms.iter().next()?;
        let c = self.terms.get(e).cloned().unwrap_or_else(Rational::zero) / v;
        (*self == other.scale(&c)).then_some(c)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let gens: Vec<String> = (0..self.model.num_gens()).map(|g| self.model.gen_label(g)).collect();
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| serde_json::json!({ "exp": e, "coef": fmt_rational(c) }))
            .collect();
        serde_json::json!({ "generators": gens, "terms": terms })
    }

    pub fn render(&self, letter: &str) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if n == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let word = self.model.render_mono(letter, e);
            if word.is_empty() {
                s.push_str(&rational_short(&a));
            } else if a.is_one() {
                s.push_str(&word);
            } else {
                s.push_str(&format!("{}*{word}", rational_short(&a)));
            }
        }
        s
    }
}

impl WeylElement {
    /// The action of the operator on a polynomial.
    pub fn apply_poly(&self, p: &WPoly) -> WPoly {
        let model = self.model().clone();
        let z = model.zero_mono();
        let as_op = WeylElement::from_terms(&model, p.terms.iter().map(|(e, c)| ((e.clone(), z.clone()), c.clone())))
            .expect("polynomial has valid exponents");
        let prod = self.mul(&as_op);
        let mut out = WPoly::zero(&model);
        for ((y, d), c) in prod.terms() {
            if deg(d) == 0 {
                out.add_term(y.clone(), c.clone());
            }
        }
        out
    }
}

/// Monomial basis of the polynomials of degree `k` on `W`.
#[derive(Clone, Debug)]
pub struct GradedPieceBasis {
    degree: usize,
    monos: Vec<WMono>,
    index: HashMap<WMono, usize>,
}

impl GradedPieceBasis {
    pub fn new(model: &WModel, k: usize) -> Self {
        fn rec(model: &WModel, g: usize, rest: usize, cur: &mut WMono, out: &mut Vec<WMono>) {
            if g == model.num_gens() {
                if rest == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let max = if model.is_odd(g) { rest.min(1) } else { rest };
            for e in (0..=max).rev() {
                cur[g] = e as u8;
                rec(model, g + 1, rest - e, cur, out);
            }
            cur[g] = 0;
        }
        let mut monos = Vec::new();
        rec(model, 0, k, &mut model.zero_mono(), &mut monos);
        let index = monos.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        GradedPieceBasis { degree: k, monos, index }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn monomials(&self) -> &[WMono] {
        &self.monos
    }

    pub fn position(&self, e: &WMono) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn coords(&self, p: &WPoly) -> Option<Vec<Rational>> {
        let mut v = vec![Rational::zero(); self.len()];
        for (e, c) in p.terms() {
            v[self.position(e)?] = c.clone();
        }
        Some(v)
    }
}

/// Matrix of `a` from degree `k` to the degree it maps into. Columns are
/// indexed by the basis of degree `k`; rows by that of degree
/// `k + ydeg - ∂deg`, which must be the same for every term.
pub fn apply(a: &WeylElement, k: usize) -> (GradedPieceBasis, RationalMatrix) {
    let model = a.model().clone();
    let shifts: Vec<i64> = a.bidegrees().iter().map(|&(y, d)| y as i64 - d as i64).collect();
    let shift = shifts.first().copied().unwrap_or(0);
    assert!(shifts.iter().all(|&s| s == shift), "operator does not have a single degree shift");
    let target = (k as i64 + shift).max(0) as usize;
    let src = GradedPieceBasis::new(&model, k);
    let dst = GradedPieceBasis::new(&model, target);
    let mut mat = RationalMatrix::zeros(dst.len(), src.len());
    for (j, e) in src.monomials().iter().enumerate() {
        let img = a.apply_poly(&WPoly::monomial(&model, e.clone(), Rational::one()));
        for (f, c) in img.terms() {
            let i = dst.position(f).expect("image lies in the target degree");
            mat.set(i, j, c.clone());
        }
    }
    (dst, mat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rint;
    use crate::superlie::SuperDims;

    #[test]
    fn basis_sizes() {
        let m = WModel::new(SuperDims::new(1, 2));
        // two even and two odd generators
        assert_eq!(GradedPieceBasis::new(&m, 0).len(), 1);
        assert_eq!(GradedPieceBasis::new(&m, 1).len(), 4);
        assert_eq!(GradedPieceBasis::new(&m, 2).len(), 3 + 4 + 1);
    }

    #[test]
    fn euler_matrix() {
        let m = Arc::new(WModel::new(SuperDims::new(1, 0)));
        let a = WeylElement::y(&m, 0, 0).mul(&WeylElement::d(&m, 0, 0));
        let (_, mat) = apply(&a, 1);
        assert_eq!(mat, RationalMatrix::from_rows(vec![vec![rint(2)]]).unwrap());
        let (_, id) = apply(&WeylElement::one(&m), 3);
        assert_eq!(id, RationalMatrix::identity(1));
    }
}
