use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::SuperDims;
use crate::error::{Error, Result};
use crate::exactmath::{fmt_rational, rational_short, Rational};

/// `E_{i,j}` as an index pair.
pub type Gen = (u8, u8);
pub type Word = Vec<Gen>;

/// Finite rational combination of words in the generators `E_{i,j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UEAElement {
    dims: SuperDims,
    terms: BTreeMap<Word, Rational>,
}

impl UEAElement {
    pub fn zero(dims: SuperDims) -> Self {
        UEAElement { dims, terms: BTreeMap::new() }
    }

    pub fn scalar(dims: SuperDims, c: Rational) -> Self {
        let mut a = Self::zero(dims);
        a.add_term(Vec::new(), c);
        a
    }

    pub fn one(dims: SuperDims) -> Self {
        Self::scalar(dims, Rational::one())
    }

    pub fn generator(dims: SuperDims, g: Gen) -> Self {
        let mut a = Self::zero(dims);
        a.add_term(vec![g], Rational::one());
        a
    }

    pub fn from_terms(dims: SuperDims, terms: impl IntoIterator<Item = (Word, Rational)>) -> Result<Self> {
        let mut a = Self::zero(dims);
        let s = dims.size() as u8;
        for (w, c) in terms {
            if w.iter().any(|&(i, j)| i >= s || j >= s) {
                return Err(Error::InvalidInput(format!("generator index out of range for {dims}")));
            }
            a.add_term(w, c);
        }
        Ok(a)
    }

    pub fn dims(&self) -> SuperDims {
        self.dims
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Maximal word length.
    pub fn filtration_degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, other: &UEAElement) -> Result<()> {
        if self.dims != other.dims {
            return Err(Error::InvalidInput(format!("ambient mismatch: {} vs {}", self.dims, other.dims)));
        }
        Ok(())
    }

    pub fn add(&self, other: &UEAElement) -> Result<UEAElement> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &UEAElement) -> Result<UEAElement> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> UEAElement {
        let mut out = UEAElement::zero(self.dims);
        for (w, v) in &self.terms {
            out.add_term(w.clone(), v * c);
        }
        out
    }

    /// Concatenation product.
    pub fn mul(&self, other: &UEAElement) -> Result<UEAElement> {
        self.check(other)?;
        let mut out = UEAElement::zero(self.dims);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1 * c2);
            }
        }
        Ok(out)
    }

    /// Parity of a homogeneous element; `None` when mixed or zero.
    pub fn parity(&self) -> Option<u8> {
        let mut ps = self
            .terms
            .keys()
            .map(|w| w.iter().map(|&g| self.dims.gen_parity(g)).sum::<u8>() % 2);
        let first = ps.next()?;
        ps.all(|p| p == first).then_some(first)
    }

    pub fn render(&self) -> String {
        self.to_string()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let label = |&(i, j): &Gen| format!("E({},{})", self.dims.label(i as usize), self.dims.label(j as usize));
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(w, c)| serde_json::json!({ "word": w.iter().map(label).collect::<Vec<_>>(), "coef": fmt_rational(c) }))
            .collect();
        serde_json::json!({ "m": self.dims.m, "n": self.dims.n, "terms": terms })
    }
}

/// `[E_{ij}, E_{kl}] = δ_{jk} E_{il} - (-1)^{(|i|+|j|)(|k|+|l|)} δ_{li} E_{kj}`.
pub fn bracket(dims: SuperDims, a: Gen, b: Gen) -> Vec<(Gen, Rational)> {
    let (i, j) = a;
    let (k, l) = b;
    let mut out: Vec<(Gen, Rational)> = Vec::with_capacity(2);
    if j == k {
        out.push(((i, l), Rational::one()));
    }
    if l == i {
        let s = dims.gen_parity(a) * dims.gen_parity(b);
        let c = if s == 1 { Rational::one() } else { -Rational::one() };
        match out.iter_mut().find(|(g, _)| *g == (k, j)) {
            Some(t) => t.1 += c,
            None => out.push(((k, j), c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

/// `xy - (-1)^{|x||y|} yx` for homogeneous `x`, `y`, without normalizing.
pub fn supercommutator(x: &UEAElement, y: &UEAElement) -> Result<UEAElement> {
    let px = x.parity().unwrap_or(0);
    let py = y.parity().unwrap_or(0);
    let xy = x.mul(y)?;
    let yx = y.mul(x)?;
    if px * py == 1 {
        xy.add(&yx)
    } else {
        xy.sub(&yx)
    }
}

/// `str(𝐄^d)` with `𝐄_{i,j} = (-1)^{|i||j|} E_{j,i}`.
pub fn gelfand_element(dims: SuperDims, d: usize) -> Result<UEAElement> {
    if d == 0 {
        return Err(Error::InvalidInput("Gelfand elements start at d = 1".into()));
    }
    let s = dims.size();
    let mut out = UEAElement::zero(dims);
    let mut idx = vec![0usize; d];
    loop {
        // path i0 -> i1 -> .. -> i_{d-1} -> i0
        let mut parity = dims.parity(idx[0]) as u32;
        let mut word = Vec::with_capacity(d);
        for t in 0..d {
            let a = idx[t];
            let b = idx[(t + 1) % d];
            parity += (dims.parity(a) * dims.parity(b)) as u32;
            word.push((b as u8, a as u8));
        }
        let c = if parity.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
        out.add_term(word, c);
        let mut t = 0;
        loop {
            if t == d {
                return Ok(out);
            }
            idx[t] += 1;
            if idx[t] < s {
                break;
            }
            idx[t] = 0;
            t += 1;
        }
    }
}

/// The antiautomorphism with `ω(x) = -x` on generators.
pub fn omega(a: &UEAElement) -> UEAElement {
    let dims = a.dims;
    let mut out = UEAElement::zero(dims);
    for (w, c) in &a.terms {
        let ps: Vec<u8> = w.iter().map(|&g| dims.gen_parity(g)).collect();
        let mut odd_pairs = 0usize;
        let mut odd_seen = 0usize;
        for &p in &ps {
            if p == 1 {
                odd_pairs += odd_seen;
                odd_seen += 1;
            }
        }
        let sign = (w.len() + odd_pairs) % 2;
        let mut r = w.clone();
        r.reverse();
        out.add_term(r, if sign == 0 { c.clone() } else { -c.clone() });
    }
    out
}

impl fmt::Display for UEAElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let word: String = w
                .iter()
                .map(|&(i, j)| format!("E({},{})", self.dims.label(i as usize), self.dims.label(j as usize)))
                .collect();
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
