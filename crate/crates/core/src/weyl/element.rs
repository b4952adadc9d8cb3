use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::{add_into, sign, WModel, WMono};
use crate::error::{Error, Result};
use crate::exactmath::{fmt_rational, rational_short, rint, Rational};

type Key = (WMono, WMono);

/// Element of the Weyl algebra in normal form `Σ c · y^Y ∂^D`.
///
/// The same data also encodes `𝒫(W) ⊗ 𝒮(W)` by reading `∂^D` as `x^D`;
/// [`WeylElement::symbol_mul`] is the product in that picture.
#[derive(Clone)]
pub struct WeylElement {
    model: Arc<WModel>,
    terms: BTreeMap<Key, Rational>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.model.dims() == other.model.dims() && self.terms == other.terms
    }
}

impl Eq for WeylElement {}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement({self})")
    }
}

/// `∂_g` applied on the left of `Y ∂^D`, accumulated into `out`.
fn d_left(model: &WModel, g: usize, y: &WMono, d: &WMono, c: &Rational, out: &mut BTreeMap<Key, Rational>) {
    let odd = model.is_odd(g);
    if y[g] > 0 {
        // ∂_g(y_g) = (-1)^{|g|} <y_g, x_g>
        let base = model.pairing(g);
        let coef = if odd {
            let neg = (model.odd_before(y, g) + 1) % 2 == 1;
            sign(neg) * base * c
        } else {
            base * rint(y[g] as i64) * c
        };
        let mut y2 = y.clone();
        y2[g] -= 1;
        add_into(out, (y2, d.clone()), coef);
    }
    if let Some((neg, d2)) = model.mono_mul(&model.unit(g), d) {
        let neg = neg ^ (odd && model.mono_parity(y) == 1);
        add_into(out, (y.clone(), d2), sign(neg) * c);
    }
}

/// Letters of `∂^D` in order, with multiplicity.
fn letters(d: &[u8]) -> Vec<usize> {
    d.iter()
        .enumerate()
        .flat_map(|(g, &k)| std::iter::repeat_n(g, k as usize))
        .collect()
}

/// Normal form of `∂^D · y^Y`.
fn reorder(model: &WModel, d: &WMono, y: &WMono) -> BTreeMap<Key, Rational> {
    let mut cur: BTreeMap<Key, Rational> = BTreeMap::new();
    cur.insert((y.clone(), model.zero_mono()), Rational::one());
    for g in letters(d).into_iter().rev() {
        let mut next = BTreeMap::new();
        for ((yy, dd), c) in &cur {
            d_left(model, g, yy, dd, c, &mut next);
        }
        cur = next;
    }
    cur
}

impl WeylElement {
    pub fn zero(model: &Arc<WModel>) -> Self {
        WeylElement { model: model.clone(), terms: BTreeMap::new() }
    }

    pub fn scalar(model: &Arc<WModel>, c: Rational) -> Self {
        let mut a = Self::zero(model);
        let z = model.zero_mono();
        add_into(&mut a.terms, (z.clone(), z), c);
        a
    }

    pub fn one(model: &Arc<WModel>) -> Self {
        Self::scalar(model, Rational::one())
    }

    fn letter(model: &Arc<WModel>, i: usize, j: usize, diff: bool) -> Self {
        let mut a = Self::zero(model);
        if let Some((g, neg)) = model.index(i, j) {
            let (y, d) = if diff { (model.zero_mono(), model.unit(g)) } else { (model.unit(g), model.zero_mono()) };
            add_into(&mut a.terms, (y, d), sign(neg));
        }
        a
    }

    /// `y_{i,j}`; zero when `i = j` is odd.
    pub fn y(model: &Arc<WModel>, i: usize, j: usize) -> Self {
        Self::letter(model, i, j, false)
    }

    /// `∂_{i,j}`; zero when `i = j` is odd.
    pub fn d(model: &Arc<WModel>, i: usize, j: usize) -> Self {
        Self::letter(model, i, j, true)
    }

    pub fn from_terms(model: &Arc<WModel>, terms: impl IntoIterator<Item = (Key, Rational)>) -> Result<Self> {
        let mut a = Self::zero(model);
        let n = model.num_gens();
        for ((y, d), c) in terms {
            if y.len() != n || d.len() != n {
                return Err(Error::LengthMismatch { expected: n, got: y.len().min(d.len()) });
            }
            let bad = (0..n).any(|g| model.is_odd(g) && (y[g] > 1 || d[g] > 1));
            if bad {
                return Err(Error::InvalidInput("odd generators must be squarefree".into()));
            }
            add_into(&mut a.terms, (y, d), c);
        }
        Ok(a)
    }

    pub fn model(&self) -> &Arc<WModel> {
        &self.model
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, y: &WMono, d: &WMono) -> Rational {
        self.terms
            .get(&(y.clone(), d.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Order: the largest `∂`-degree.
    pub fn order(&self) -> usize {
        self.terms.keys().map(|(_, d)| deg(d)).max().unwrap_or(0)
    }

    /// Distinct `(y-degree, ∂-degree)` pairs.
    pub fn bidegrees(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = self.terms.keys().map(|(y, d)| (deg(y), deg(d))).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Parity of a homogeneous element; `None` when mixed or zero.
    pub fn parity(&self) -> Option<u8> {
        let mut ps = self
            .terms
            .keys()
            .map(|(y, d)| (self.model.mono_parity(y) + self.model.mono_parity(d)) % 2);
        let first = ps.next()?;
        ps.all(|p| p == first).then_some(first)
    }

    fn same(&self, other: &WeylElement) {
        assert_eq!(self.model.dims(), other.model.dims(), "Weyl algebra ambient mismatch");
    }

    pub fn add(&self, other: &WeylElement) -> WeylElement {
        self.same(other);
        let mut out = self.clone();
        for (k, c) in &other.terms {
            add_into(&mut out.terms, k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &WeylElement) -> WeylElement {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> WeylElement {
        let mut out = WeylElement::zero(&self.model);
        for (k, v) in &self.terms {
            add_into(&mut out.terms, k.clone(), v * c);
        }
        out
    }

    /// Operator product, renormalized with `y` left of `∂`.
    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        self.same(other);
        let model = &*self.model;
        let mut memo: HashMap<(&WMono, &WMono), BTreeMap<Key, Rational>> = HashMap::new();
        let mut out = BTreeMap::new();
        for ((y1, d1), c1) in &self.terms {
            for ((y2, d2), c2) in &other.terms {
                let mid = memo.entry((d1, y2)).or_insert_with(|| reorder(model, d1, y2));
                for ((y, d), c) in mid.iter() {
                    let Some((n1, yy)) = model.mono_mul(y1, y) else { continue };
                    let Some((n2, dd)) = model.mono_mul(d, d2) else { continue };
                    add_into(&mut out, (yy, dd), sign(n1 ^ n2) * c * c1 * c2);
                }
            }
        }
        WeylElement { model: self.model.clone(), terms: out }
    }

    /// `ab - (-1)^{|a||b|} ba` for homogeneous `a`, `b`.
    pub fn supercommutator(&self, other: &WeylElement) -> WeylElement {
        let pa = self.parity().unwrap_or(0);
        let pb = other.parity().unwrap_or(0);
        let ab = self.mul(other);
        let ba = other.mul(self);
        if pa * pb == 1 {
            ab.add(&ba)
        } else {
            ab.sub(&ba)
        }
    }

    /// Product in `𝒫(W) ⊗ 𝒮(W)`:
    /// `(Y1 ⊗ D1)(Y2 ⊗ D2) = (-1)^{|D1||Y2|} Y1 Y2 ⊗ D1 D2`.
    pub fn symbol_mul(&self, other: &WeylElement) -> WeylElement {
        self.same(other);
        let model = &*self.model;
        let mut out = BTreeMap::new();
        for ((y1, d1), c1) in &self.terms {
            for ((y2, d2), c2) in &other.terms {
                let Some((n1, yy)) = model.mono_mul(y1, y2) else { continue };
                let Some((n2, dd)) = model.mono_mul(d1, d2) else { continue };
                let n3 = model.mono_parity(d1) * model.mono_parity(y2) == 1;
                add_into(&mut out, (yy, dd), sign(n1 ^ n2 ^ n3) * c1 * c2);
            }
        }
        WeylElement { model: self.model.clone(), terms: out }
    }

    /// The `d`-th order symbol: the part of `∂`-degree exactly `d`.
    pub fn symbol(&self, d: usize) -> Result<WeylElement> {
        let ord = self.order();
        if ord > d && !self.is_zero() {
            return Err(Error::InvalidInput(format!("operator of order {ord} has no symbol of order {d}")));
        }
        Ok(self.filter(|_, dd| deg(dd) == d))
    }

    /// The part of bidegree `(a, b)`.
    pub fn bidegree_part(&self, a: usize, b: usize) -> WeylElement {
        self.filter(|y, d| deg(y) == a && deg(d) == b)
    }

    fn filter(&self, keep: impl Fn(&WMono, &WMono) -> bool) -> WeylElement {
        WeylElement {
            model: self.model.clone(),
            terms: self
                .terms
                .iter()
                .filter(|((y, d), _)| keep(y, d))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let dims = self.model.dims();
        let gens: Vec<String> = (0..self.model.num_gens()).map(|g| self.model.gen_label(g)).collect();
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .rev()
            .map(|((y, d), c)| serde_json::json!({ "y": y, "d": d, "coef": fmt_rational(c) }))
            .collect();
        serde_json::json!({ "m": dims.m, "n": dims.n, "generators": gens, "terms": terms })
    }
}

pub(crate) fn deg(e: &[u8]) -> usize {
    e.iter().map(|&k| k as usize).sum()
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, ((y, d), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let word = format!("{}{}", self.model.render_mono("y", y), self.model.render_mono("d", d));
            if word.is_empty() {
                write!(f, "{}", rational_short(&a))?;
            } else if a.is_one() {
                write!(f, "{word}")?;
            } else {
                write!(f, "{}*{word}", rational_short(&a))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superlie::SuperDims;

    #[test]
    fn canonical_commutation() {
        let m = Arc::new(WModel::new(SuperDims::new(1, 0)));
        let d = WeylElement::d(&m, 0, 0);
        let y = WeylElement::y(&m, 0, 0);
        assert_eq!(d.mul(&y).to_string(), "y(1,1)d(1,1) + 2");
        assert_eq!(y.mul(&y).to_string(), "y(1,1)^2");
    }

    #[test]
    fn odd_commutation() {
        let m = Arc::new(WModel::new(SuperDims::new(1, 1)));
        let d = WeylElement::d(&m, 0, 1);
        let y = WeylElement::y(&m, 0, 1);
        // ∂ y + y ∂ = ∂(y) = -1
        assert_eq!(d.supercommutator(&y), WeylElement::scalar(&m, rint(-1)));
        assert!(y.mul(&y).is_zero());
        assert!(d.mul(&d).is_zero());
    }

    #[test]
    fn symbols() {
        let m = Arc::new(WModel::new(SuperDims::new(1, 0)));
        let d = WeylElement::d(&m, 0, 0);
        let y = WeylElement::y(&m, 0, 0);
        let a = y.mul(&d).add(&WeylElement::one(&m));
        assert_eq!(a.symbol(1).unwrap(), y.mul(&d));
        assert!(a.symbol(0).is_err());
        assert_eq!(a.order(), 1);
    }
}
