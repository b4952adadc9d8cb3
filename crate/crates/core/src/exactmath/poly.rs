use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{fmt_rational, rational_short, parse_rational, Rational};
use crate::error::{Error, Result};

/// An ordered list of variable names. Polynomials only combine when their
/// contexts agree.
#[derive(Clone, Debug)]
pub struct Context(Arc<[String]>);

impl Context {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        Context(names.into_iter().map(Into::into).collect::<Vec<_>>().into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }
}

impl PartialEq for Context {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Context {}

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    ctx: Context,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(ctx: &Context) -> Self {
        MultiPoly { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ctx: &Context, c: Rational) -> Self {
        let mut p = Self::zero(ctx);
        p.add_term(Monomial::one(ctx.len()), c);
        p
    }

    pub fn one(ctx: &Context) -> Self {
        Self::constant(ctx, Rational::one())
    }

    pub fn var(ctx: &Context, i: usize) -> Self {
        let mut e = vec![0; ctx.len()];
        e[i] = 1;
        let mut p = Self::zero(ctx);
        p.add_term(Monomial(e), Rational::one());
        p
    }

    pub fn from_terms(
        ctx: &Context,
        terms: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Result<Self> {
        let mut p = Self::zero(ctx);
        for (e, c) in terms {
            if e.len() != ctx.len() {
                return Err(Error::LengthMismatch { expected: ctx.len(), got: e.len() });
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    pub fn context(&self) -> &Context {
        &self.ctx
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms
            .get(&Monomial(e.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, e: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(e.0.len(), self.ctx.len());
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
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

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    fn check(&self, other: &MultiPoly) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch(format!(
                "{:?} vs {:?}",
                self.ctx.names(),
                other.ctx.names()
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                *acc.entry(e1.mul(e2)).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(MultiPoly { ctx: self.ctx.clone(), terms: acc })
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.ctx);
        }
        MultiPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut out = MultiPoly::one(&self.ctx);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.ctx.len() {
            return Err(Error::LengthMismatch { expected: self.ctx.len(), got: point.len() });
        }
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(&e.0) {
                for _ in 0..k {
                    t *= x;
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Homogeneous component of highest degree.
    pub fn top_part(&self) -> Result<MultiPoly> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        Ok(self.homogeneous_part(d))
    }

    pub fn homogeneous_part(&self, d: u32) -> MultiPoly {
        MultiPoly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitute a polynomial over `target` for every variable.
    pub fn substitute(&self, target: &Context, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.ctx.len() {
            return Err(Error::LengthMismatch { expected: self.ctx.len(), got: images.len() });
        }
        for im in images {
            if im.context() != target {
                return Err(Error::ContextMismatch("substitution image".into()));
            }
        }
        let mut powers: Vec<Vec<MultiPoly>> = images.iter().map(|p| vec![MultiPoly::one(target), p.clone()]).collect();
        let mut out = MultiPoly::zero(target);
        for (e, c) in &self.terms {
            let mut t = MultiPoly::constant(target, c.clone());
            for (i, &k) in e.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][k as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Same coefficients, reinterpreted over another context of equal length.
    pub fn rename(&self, ctx: &Context) -> Result<MultiPoly> {
        if ctx.len() != self.ctx.len() {
            return Err(Error::LengthMismatch { expected: self.ctx.len(), got: ctx.len() });
        }
        Ok(MultiPoly { ctx: ctx.clone(), terms: self.terms.clone() })
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            vars: self.ctx.names().to_vec(),
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(e, c)| TermJson { exp: e.0.clone(), coef: fmt_rational(c) })
                .collect(),
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<MultiPoly> {
        let ctx = Context::new(j.vars.iter().cloned());
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            terms.push((t.exp.clone(), parse_rational(&t.coef)?));
        }
        MultiPoly::from_terms(&ctx, terms)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("polynomial JSON serializes")
    }

    pub fn from_json_str(s: &str) -> Result<MultiPoly> {
        let j: PolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&j)
    }
}

/// Wire format: `{"vars":[..],"terms":[{"exp":[..],"coef":"num/den"}]}`,
/// terms listed from the largest monomial in graded-lex order down.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coef: String,
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .0
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    let v = &self.ctx.names()[i];
                    if k == 1 { v.clone() } else { format!("{v}^{k}") }
                })
                .collect();
            let neg = c.is_negative();
            let a = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if mono.is_empty() {
                write!(f, "{}", rational_short(&a))?;
            } else if a.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", rational_short(&a), mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("polynomial contexts must agree")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).expect("polynomial contexts must agree")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("polynomial contexts must agree")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, rint};

    fn xy() -> (Context, MultiPoly, MultiPoly) {
        let c = Context::new(["x", "y"]);
        let x = MultiPoly::var(&c, 0);
        let y = MultiPoly::var(&c, 1);
        (c, x, y)
    }

    #[test]
    fn arithmetic_examples() {
        let (c, x, y) = xy();
        let one = MultiPoly::one(&c);
        let p = &x + &one;
        assert!((&p + &(-&p)).is_zero());
        assert_eq!(&(&x + &y) * &(&x - &y), &(&x * &x) - &(&y * &y));
        let q = &(&x + &y) - &MultiPoly::constant(&c, rat(1, 2));
        let two = &(&x.scale(&rint(2)) + &y.scale(&rint(2))) - &one;
        assert_eq!(q.scale(&rint(2)), two);
        assert_eq!(q.eval(&[rint(0), rat(3, 2)]).unwrap(), rint(1));
        assert_eq!(q.top_part().unwrap(), &x + &y);
    }

    #[test]
    fn eval_and_errors() {
        let c = Context::new(["x"]);
        let x = MultiPoly::var(&c, 0);
        assert_eq!((&x * &x).eval(&[rat(-3, 2)]).unwrap(), rat(9, 4));
        assert_eq!(MultiPoly::zero(&c).eval(&[rint(5)]).unwrap(), rint(0));
        assert!(x.eval(&[]).is_err());
        assert_eq!(MultiPoly::zero(&c).top_part(), Err(Error::ZeroPolynomial));
        let other = Context::new(["t"]);
        assert!(x.checked_add(&MultiPoly::var(&other, 0)).is_err());
    }

    #[test]
    fn json_round_trip() {
        let (_, x, y) = xy();
        let p = &(&x * &x).scale(&rat(3, 2)) - &y;
        let s = p.to_json_string();
        assert_eq!(s, r#"{"vars":["x","y"],"terms":[{"exp":[2,0],"coef":"3/2"},{"exp":[0,1],"coef":"-1/1"}]}"#);
        assert_eq!(MultiPoly::from_json_str(&s).unwrap(), p);
        assert_eq!(p.to_string(), "3/2*x^2 - y");
    }
}
